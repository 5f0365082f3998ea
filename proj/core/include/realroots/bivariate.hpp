/*
  bivariate.hpp

  Bivariate polynomials over Z and real solving of bivariate systems:
  resultants and Sturm-Habicht sequences with one coefficient variable, exact
  sign evaluation F(alpha, beta), naive solving by resultants in both
  directions, generic-position detection, rational-univariate lifting of
  y-coordinates, and bivariate simultaneous sign conditions.
*/
#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "realroots/algebraic_number.hpp"

namespace realroots {

enum class Var { x, y };

class BivariatePolynomial {
public:
    BivariatePolynomial() = default;
    // coefficient of Y^j as a polynomial in X, low j first
    explicit BivariatePolynomial(std::vector<IntPolynomial> y_coeffs);
    // terms (c, i, j) meaning c * X^i * Y^j
    static BivariatePolynomial from_terms(
        const std::vector<std::tuple<BigInt, unsigned, unsigned>>& terms);
    static BivariatePolynomial from_univariate(const IntPolynomial& p, Var v);

    bool is_zero() const { return yc_.empty(); }
    int deg_x() const;
    int deg_y() const { return static_cast<int>(yc_.size()) - 1; }
    int total_degree() const;
    BigInt coefficient(unsigned i, unsigned j) const;  // of X^i Y^j
    const std::vector<IntPolynomial>& y_coeffs() const { return yc_; }

    // view as a univariate polynomial in `main`, coefficients in the other one
    Poly<IntPolynomial> as_poly(Var main) const;
    static BivariatePolynomial from_poly(const Poly<IntPolynomial>& p, Var main);

    BivariatePolynomial swapped() const;  // exchange X and Y

    RatPolynomial substitute_x(const Rational& x0) const;  // -> polynomial in Y
    RatPolynomial substitute_y(const Rational& y0) const;  // -> polynomial in X
    Rational evaluate(const Rational& x, const Rational& y) const;

    BivariatePolynomial derivative(Var v) const;
    BivariatePolynomial sheared_x(long a) const;  // X -> X + a*Y

    BivariatePolynomial operator+(const BivariatePolynomial& o) const;
    BivariatePolynomial operator-(const BivariatePolynomial& o) const;
    BivariatePolynomial operator*(const BivariatePolynomial& o) const;
    bool operator==(const BivariatePolynomial& o) const { return yc_ == o.yc_; }

private:
    void trim();
    std::vector<IntPolynomial> yc_;
};

// Resultant with respect to `var`, a polynomial in the other variable, equal
// to the Sylvester determinant over the coefficient ring. DomainError when
// both inputs are constant in `var`.
IntPolynomial bivar_resultant(const BivariatePolynomial& F, const BivariatePolynomial& G,
                              Var var);

struct BivarStHaSequence {
    Var main;
    std::vector<BivariatePolynomial> polys;   // polys[j] = H_j in the main variable
    std::vector<IntPolynomial> principal;     // h_j as polynomials in the other variable
    int top() const { return static_cast<int>(polys.size()) - 1; }
};

// Requires deg_var F > deg_var G >= 0. Specializing at any point preserving
// the leading degrees yields the univariate sequence of the specialized pair.
BivarStHaSequence bivar_stha_sequence(const BivariatePolynomial& F,
                                      const BivariatePolynomial& G, Var var);

// Exact sign of F(alpha, beta).
Sign bivar_sign_at(const BivariatePolynomial& F, const AlgebraicNumber& alpha,
                   const AlgebraicNumber& beta);

struct RurWitness {
    unsigned k;                 // index of the first nonvanishing principal coefficient
    IntPolynomial numerator;    // -h_{k,k-1}
    IntPolynomial denominator;  // k * h_k;  y = numerator(x) / denominator(x)
};

struct SystemSolution {
    AlgebraicNumber x;
    AlgebraicNumber y;
    std::optional<RurWitness> rur_witness;
};

// Real solutions of F = G = 0 by resultants in both directions and exact sign
// certification of every candidate pair. Inputs must be square-free; a common
// component raises CommonComponentError. Sorted by (x, y).
std::vector<SystemSolution> naive_solve(const BivariatePolynomial& F,
                                        const BivariatePolynomial& G);

// True iff no two distinct real solutions share an x-coordinate.
bool generic_position_check(const BivariatePolynomial& F, const BivariatePolynomial& G);

// Real solving with the y-coordinates recovered by the rational-univariate
// lifting formula; each solution carries its witness. An optional shear
// (X, Y) -> (X + shear*Y, Y) is applied first and solutions are reported in
// the sheared frame. GenericPositionError when the (sheared) system is not in
// generic position.
std::vector<SystemSolution> rur_solve(const BivariatePolynomial& F,
                                      const BivariatePolynomial& G,
                                      std::optional<long> shear = std::nullopt);

// Solutions of P = Q = 0 with A(x,y) > 0 for A in gt, B(x,y) < 0 for B in lt,
// C(x,y) = 0 for C in eq.
std::vector<SystemSolution> satisfy_bivariate(const BivariatePolynomial& P,
                                              const BivariatePolynomial& Q,
                                              const std::vector<BivariatePolynomial>& gt,
                                              const std::vector<BivariatePolynomial>& lt,
                                              const std::vector<BivariatePolynomial>& eq);

// Square-freeness helper (the solvers leave square-freeness to the caller).
bool bivar_is_square_free(const BivariatePolynomial& F);

}  // namespace realroots
