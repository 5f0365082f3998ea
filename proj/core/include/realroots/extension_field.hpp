/*
  extension_field.hpp

  Arithmetic in Q(alpha) for a real algebraic alpha. Elements are integer
  polynomials of degree below the defining polynomial's, with an implicit
  positive integer denominator so coefficients stay integral. Inversion uses
  the extended Euclidean algorithm; when the defining polynomial turns out not
  to be minimal (a zero divisor appears), it is split and alpha re-anchored to
  the factor it is a root of, then the inversion retried.
*/
#pragma once

#include "realroots/algebraic_number.hpp"

namespace realroots {

class ExtFieldElement {
public:
    // value = poly(alpha) / den, reduced modulo the defining polynomial
    ExtFieldElement(AlgebraicNumber base, const IntPolynomial& poly, const BigInt& den = BigInt(1));

    static ExtFieldElement from_rational(const AlgebraicNumber& base, const Rational& r);
    // the generator alpha itself
    static ExtFieldElement generator(const AlgebraicNumber& base);

    const AlgebraicNumber& base() const { return base_; }
    const IntPolynomial& poly() const { return poly_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return poly_.is_zero(); }

    bool same_base(const ExtFieldElement& o) const;

private:
    struct raw_t {};
    ExtFieldElement(raw_t, AlgebraicNumber base, IntPolynomial poly, BigInt den);
    void normalize();

    AlgebraicNumber base_;
    IntPolynomial poly_;
    BigInt den_;  // positive

    friend ExtFieldElement extfield_rebase(const ExtFieldElement&, const AlgebraicNumber&);
};

ExtFieldElement extfield_add(const ExtFieldElement& u, const ExtFieldElement& v);
ExtFieldElement extfield_sub(const ExtFieldElement& u, const ExtFieldElement& v);
ExtFieldElement extfield_mul(const ExtFieldElement& u, const ExtFieldElement& v);

// Multiplicative inverse. DivisionByZero if u represents 0. The result's base
// may carry a smaller defining polynomial when a zero divisor forced a split.
ExtFieldElement extfield_inverse(const ExtFieldElement& u);

Sign extfield_sign(const ExtFieldElement& u);

// Re-anchor an element onto an equal base (same real number, possibly a
// different defining polynomial); reduces the representation modulo the new
// defining polynomial.
ExtFieldElement extfield_rebase(const ExtFieldElement& u, const AlgebraicNumber& new_base);

}  // namespace realroots
