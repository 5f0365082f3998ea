#include "realroots/bounds.hpp"

namespace realroots {

std::size_t bitsize(const IntPolynomial& p) {
    if (p.is_zero()) throw DomainError("bitsize of zero polynomial");
    BigInt m(0);
    for (const auto& c : p.coeffs()) {
        BigInt a = abs_of(c);
        if (a > m) m = a;
    }
    return bit_length(m) + 1;  // floor(lg m) + 2 = (bit_length - 1) + 2
}

Rational sqrt_lower(const BigInt& n, unsigned precision_bits) {
    if (sign_of(n) < 0) throw DomainError("sqrt of negative");
    if (sign_of(n) == 0) return Rational(0);
    BigInt scale = pow_of(BigInt(2), precision_bits);
    BigInt s = isqrt(n * scale * scale);
    return Rational(s, scale);  // floor(sqrt(n*4^m))/2^m <= sqrt(n)
}

Rational sqrt_upper(const BigInt& n, unsigned precision_bits) {
    if (sign_of(n) < 0) throw DomainError("sqrt of negative");
    if (sign_of(n) == 0) return Rational(0);
    BigInt scale = pow_of(BigInt(2), precision_bits);
    BigInt s = isqrt(n * scale * scale);
    if (s * s == n * scale * scale) return Rational(s, scale);
    return Rational(s + 1, scale);
}

Rational cauchy_root_bound(const IntPolynomial& f) {
    if (f.degree() < 1) throw DomainError("Cauchy bound needs degree >= 1");
    Rational m(0);
    const BigInt& lead = f.leading();
    for (int i = 0; i < f.degree(); ++i) {
        Rational q = Rational(f.coeff(static_cast<std::size_t>(i)), lead).abs();
        if (q > m) m = q;
    }
    return Rational(1) + m;
}

Rational mahler_measure_upper_bound(const IntPolynomial& f) {
    if (f.is_zero()) throw DomainError("Mahler bound of zero polynomial");
    std::size_t tau = bitsize(f);
    unsigned long d = static_cast<unsigned long>(f.degree());
    Rational two_tau(pow_of(BigInt(2), tau));
    return two_tau * sqrt_upper(BigInt(static_cast<long>(d + 1)));
}

namespace {

Rational rational_pow(const Rational& r, unsigned long e) {
    return Rational(pow_of(r.num(), e), pow_of(r.den(), e));
}

// Lower bound on n^(-e/2) for integer n >= 1, e >= 0.
Rational half_power_reciprocal_lower(unsigned long n, unsigned long e) {
    BigInt nn(static_cast<long>(n));
    BigInt whole = pow_of(nn, e / 2);
    if (e % 2 == 0) return Rational(BigInt(1), whole);
    return Rational(1) / (Rational(whole) * sqrt_upper(nn));
}

}  // namespace

Rational davenport_mahler_lower_bound(const IntPolynomial& f, unsigned k) {
    if (f.degree() < 2) throw DomainError("Davenport-Mahler bound needs degree >= 2");
    unsigned long d = static_cast<unsigned long>(f.degree());
    if (k < 1 || k > d - 1) throw DomainError("Davenport-Mahler bound: k out of range");
    Rational m = mahler_measure_upper_bound(f);
    // M^(1-d): M >= 1, so using the upper bound for M keeps the result a lower bound
    Rational m_term = rational_pow(Rational(1) / m, d - 1);
    Rational d_term = half_power_reciprocal_lower(d, d);
    Rational gap_term = rational_pow(sqrt_lower(BigInt(3)) / Rational(BigInt(static_cast<long>(d))), k);
    return m_term * d_term * gap_term;
}

Rational separation_lower_bound(const IntPolynomial& f) {
    if (f.degree() < 2) throw DomainError("separation bound needs degree >= 2");
    unsigned long d = static_cast<unsigned long>(f.degree());
    std::size_t tau = bitsize(f);
    Rational d_term = half_power_reciprocal_lower(d, d + 2);
    Rational d1_term = half_power_reciprocal_lower(d + 1, d - 1);
    Rational two_term(BigInt(1), pow_of(BigInt(2), tau * (d - 1)));
    return d_term * d1_term * two_term;
}

}  // namespace realroots
