/*
  numeric.hpp

  Exact scalar arithmetic: arbitrary-precision integers (GMP) and canonical
  rationals. Rational enforces the invariants gcd(|num|, den) = 1 and den > 0
  at construction; all arithmetic preserves them.
*/
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "realroots/errors.hpp"

namespace realroots {

using BigInt = mpz_class;

inline int sign_of(const BigInt& a) { return mpz_sgn(a.get_mpz_t()); }

// floor(lg |a|) + 1 for a != 0.
inline std::size_t bit_length(const BigInt& a) {
    if (sign_of(a) == 0) throw DomainError("bit_length of zero");
    return mpz_sizeinbase(a.get_mpz_t(), 2);
}

inline BigInt abs_of(const BigInt& a) { return abs(a); }

inline BigInt gcd_of(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline BigInt pow_of(const BigInt& a, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

// Quotient of an exact division; throws InternalError if b does not divide a.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (sign_of(b) == 0) throw InternalError("exact_div by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw InternalError("exact_div: not divisible");
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// isqrt(a) for a >= 0.
inline BigInt isqrt(const BigInt& a) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}                    // NOLINT: implicit by design
    Rational(const BigInt& n) : q_(n) {}           // NOLINT
    Rational(const BigInt& num, const BigInt& den) {
        if (sign_of(den) == 0) throw DivisionByZero("rational with zero denominator");
        q_ = mpq_class(num) / mpq_class(den);      // mpq_class division canonicalizes
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    static Rational from_mpq(mpq_class q) {
        q.canonicalize();
        Rational r;
        r.q_ = std::move(q);
        return r;
    }

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    int sign() const { return mpq_sgn(q_.get_mpq_t()); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return from_mpq(-q_); }
    Rational operator+(const Rational& o) const { return from_mpq(q_ + o.q_); }
    Rational operator-(const Rational& o) const { return from_mpq(q_ - o.q_); }
    Rational operator*(const Rational& o) const { return from_mpq(q_ * o.q_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        return from_mpq(q_ / o.q_);
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = cmp(q_, o.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // Canonical textual form "p/q" (always with the denominator).
    std::string str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

inline Rational operator*(const BigInt& a, const Rational& r) { return Rational(a) * r; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

// max bit size of numerator and denominator (paper's L(a) for rationals).
inline std::size_t rational_bitsize(const Rational& r) {
    if (r.is_zero()) return 1;
    return std::max(bit_length(r.num()), bit_length(r.den()));
}

}  // namespace realroots
