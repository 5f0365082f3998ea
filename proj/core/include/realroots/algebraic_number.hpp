/*
  algebraic_number.hpp

  Real algebraic numbers in isolating-interval representation: a square-free
  integer polynomial plus a rational interval containing exactly one of its
  real roots, with an exact-point shortcut for rational numbers. Provides
  univariate real root isolation with multiplicities, interval refinement,
  exact sign evaluation of a polynomial at a number, comparison, separating
  rationals and simultaneous sign conditions.
*/
#pragma once

#include <optional>
#include <vector>

#include "realroots/bounds.hpp"
#include "realroots/sturm_habicht.hpp"

namespace realroots {

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline Sign sign_from_int(int s) {
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}
inline int to_int(Sign s) { return static_cast<int>(s); }

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

class AlgebraicNumber {
public:
    // Validating constructor: requires a square-free defining polynomial with
    // exactly one real root in [lo, hi]. A rational root (degree-1 defining
    // polynomial, an endpoint root, or lo == hi) yields an exact-point value.
    AlgebraicNumber(const IntPolynomial& defining, const Rational& lo, const Rational& hi);

    static AlgebraicNumber from_rational(const Rational& r);

    const IntPolynomial& defining() const { return defining_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    bool is_exact() const { return exact_.has_value(); }
    const Rational& exact_value() const {
        if (!exact_) throw DomainError("exact_value of non-exact algebraic number");
        return *exact_;
    }
    // Sign of the defining polynomial just right of the root (= sign of P'(alpha)).
    int derivative_sign() const;

    Rational width() const { return hi_ - lo_; }

    struct unchecked_t {};
    // Trusted construction for internal callers holding the invariants.
    AlgebraicNumber(unchecked_t, IntPolynomial defining, Rational lo, Rational hi,
                    std::optional<Rational> exact);

private:
    IntPolynomial defining_;  // square-free, primitive, positive leading coefficient
    Rational lo_, hi_;
    std::optional<Rational> exact_;
};

struct IsolatedRoot {
    AlgebraicNumber number;
    unsigned multiplicity;
};

struct IsolationStats {
    unsigned subdivisions = 0;  // number of interval bisections performed
};

// All real roots of f in increasing order, each with its multiplicity in f.
// deg f >= 1.
std::vector<IsolatedRoot> isolate_real_roots(const IntPolynomial& f);
std::vector<IsolatedRoot> isolate_real_roots(const IntPolynomial& f, IsolationStats& stats);

// One bisection step: same number, halved interval (or exact point when the
// midpoint is the root). Exact input is returned unchanged.
AlgebraicNumber refine(const AlgebraicNumber& alpha);

// Refine until the interval width is at most w.
AlgebraicNumber refine_to_width(const AlgebraicNumber& alpha, const Rational& w);

// Exact sign of Q(alpha).
Sign sign_at(const IntPolynomial& Q, const AlgebraicNumber& alpha);

Ordering compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

// l + 1 rationals strictly interleaving l strictly-increasing roots.
std::vector<Rational> separating_rationals(const std::vector<AlgebraicNumber>& roots);

// Real roots gamma of P with A(gamma) > 0 for all A in gt, B(gamma) < 0 for
// all B in lt, C(gamma) = 0 for all C in eq.
std::vector<IsolatedRoot> satisfy_univariate(const IntPolynomial& P,
                                             const std::vector<IntPolynomial>& gt,
                                             const std::vector<IntPolynomial>& lt,
                                             const std::vector<IntPolynomial>& eq);

}  // namespace realroots
