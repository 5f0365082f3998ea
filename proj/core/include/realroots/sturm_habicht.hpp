/*
  sturm_habicht.hpp

  Sturm-Habicht machinery over Z[X]: the full sequence H_p..H_0 with principal
  coefficients, the quotient-boot compressed form with fast evaluation at
  rational or infinite points, modified sign-variation counting, Tarski
  queries, real-root counting, resultants, gcd, square-free part and Yun
  square-free factorization.
*/
#pragma once

#include <optional>
#include <vector>

#include "realroots/extended_point.hpp"
#include "realroots/polynomial.hpp"
#include "realroots/subresultant_chain.hpp"

namespace realroots {

struct SturmHabichtSequence {
    std::vector<IntPolynomial> polys;  // polys[j] = H_j for j = 0..p; zeros stored
    std::vector<BigInt> principal;     // principal[j] = h_j = coeff_j(H_j); h_p = 1
    int top() const { return static_cast<int>(polys.size()) - 1; }
};

// Full sequence of (A, B). Requires deg A > deg B when B is nonzero; B = 0
// yields the sequence (A) with a zero tail.
SturmHabichtSequence stha_sequence(const IntPolynomial& A, const IntPolynomial& B);

// Compressed representation: the signed-PRS quotients plus the last nonzero
// sequence element; each nonzero H_j is a rational multiple of a signed-PRS
// element, recorded per element. The scale sign is part of the record (it is
// negative for some defective configurations), so evaluation reproduces the
// exact sign of every H_j at every point.
struct QuotientBoot {
    struct ElementRef {
        int sprs_index = -1;  // H_j = scale * R_{sprs_index}
        Rational scale;
        int degree = -1;
        int leading_sign = 0;
    };
    std::vector<RatPolynomial> quotients;            // Q_i = quo(R_i, R_{i+1})
    IntPolynomial last;                              // last nonzero H_j
    int last_index = -1;                             // its sequence index
    int sprs_size = 0;                               // number of signed-PRS elements
    std::vector<std::optional<ElementRef>> elements; // index j = 0..p
    int top() const { return static_cast<int>(elements.size()) - 1; }
};

QuotientBoot stha_quotient_boot(const IntPolynomial& A, const IntPolynomial& B);

// Signs of H_p, ..., H_0 (in that order) at a point.
struct SignSequence {
    std::vector<int> signs;
};

SignSequence eval_stha_at(const QuotientBoot& boot, const ExtendedPoint& x);

// Generalized sign-variation count W: a consecutive nonzero pair of opposite
// signs counts 1; a,0,b counts 1; a,0,0,b counts 2; trailing zeros ignored.
// First entry must be nonzero; three or more interior zeros cannot occur for
// valid evaluations and raise StructureError.
unsigned modified_sign_variations(const SignSequence& s);

// Sum over the real roots gamma of A in (a, b) of sign(A'(gamma) * B(gamma)).
// Requires A square-free, gcd(A, B) constant, a < b, and finite endpoints
// that are not roots of A.
long tarski_query(const IntPolynomial& A, const IntPolynomial& B,
                  const ExtendedPoint& a, const ExtendedPoint& b);

// Number of distinct real roots of square-free A in (a, b).
unsigned count_real_roots(const IntPolynomial& A, const ExtendedPoint& a, const ExtendedPoint& b);

// Same, over a precomputed boot of (A, A'). No precondition checks.
unsigned count_real_roots(const QuotientBoot& sturm_boot, const ExtendedPoint& a,
                          const ExtendedPoint& b);

// Sylvester resultant with the classical sign.
BigInt resultant(const IntPolynomial& A, const IntPolynomial& B);

// Primitive gcd with positive leading coefficient; accepts any degree order.
IntPolynomial gcd(const IntPolynomial& A, const IntPolynomial& B);

bool is_square_free(const IntPolynomial& A);

// Primitive A / gcd(A, A') with positive leading coefficient. deg A >= 1.
IntPolynomial square_free_part(const IntPolynomial& A);

struct SquareFreeDecomposition {
    struct Factor {
        IntPolynomial poly;      // square-free, primitive, positive leading coefficient
        unsigned multiplicity;   // exponent in f = g_1 g_2^2 ... g_m^m
    };
    std::vector<Factor> factors;  // increasing multiplicity; constants omitted
};

// Yun's algorithm; the factor product reconstructs f up to content and sign.
SquareFreeDecomposition square_free_factorization(const IntPolynomial& f);

namespace detail {

// Cauchy index of B/A over (a, b) via W counting; assumes deg A >= 1 and
// non-root finite endpoints, no other checks.
long cauchy_index(const IntPolynomial& A, const IntPolynomial& B,
                  const ExtendedPoint& a, const ExtendedPoint& b);

}  // namespace detail

}  // namespace realroots
