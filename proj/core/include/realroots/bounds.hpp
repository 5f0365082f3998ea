/*
  bounds.hpp

  Root and separation bounds: coefficient bitsize, the Cauchy root bound, a
  rational upper bound on the Mahler measure, the Davenport-Mahler gap-product
  lower bound and the minimum root separation lower bound. Irrational factors
  are rounded outward (down for lower bounds, up for upper bounds) so every
  returned value is an exact rational that is still a valid bound.
*/
#pragma once

#include "realroots/numeric.hpp"
#include "realroots/polynomial.hpp"

namespace realroots {

// L(P) = floor(lg max|a_i|) + 2. DomainError on the zero polynomial.
std::size_t bitsize(const IntPolynomial& p);

// Rational q with q <= sqrt(n), accurate to 2^-precision_bits. n >= 0.
Rational sqrt_lower(const BigInt& n, unsigned precision_bits = 32);
// Rational q with q >= sqrt(n).
Rational sqrt_upper(const BigInt& n, unsigned precision_bits = 32);

// B = 1 + max_i |a_i / a_d|; every real root of f lies in (-B, B).
// DomainError if deg f < 1.
Rational cauchy_root_bound(const IntPolynomial& f);

// Rational bound >= 2^tau * sqrt(d+1) >= M(f). f nonzero.
Rational mahler_measure_upper_bound(const IntPolynomial& f);

// Rational lower bound on prod |alpha_i - alpha_{i+1}| over k consecutive gaps
// of the distinct real roots: M^(1-d) * d^(-d/2) * (sqrt(3)/d)^k with M the
// Mahler upper bound. Requires deg f >= 2 and 1 <= k <= deg f - 1.
Rational davenport_mahler_lower_bound(const IntPolynomial& f, unsigned k);

// Rational lower bound on the minimum distance between distinct real roots:
// d^(-(d+2)/2) * (d+1)^((1-d)/2) * 2^(tau(1-d)). Requires deg f >= 2.
Rational separation_lower_bound(const IntPolynomial& f);

}  // namespace realroots
