/*
  polynomial.hpp

  Dense univariate polynomials over an exact coefficient ring, low-to-high
  exponent order. The zero polynomial is the empty coefficient list and has
  degree -1. Poly<BigInt> and Poly<Rational> are the workhorses; Poly<Poly<BigInt>>
  serves as "polynomial over Z[X]" for bivariate subresultant computations.
*/
#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "realroots/errors.hpp"
#include "realroots/numeric.hpp"

namespace realroots {

template <typename C>
struct RingOps;  // zero/one/is_zero/neg/exact_div per coefficient ring

template <typename C>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<C> low_to_high) : c_(low_to_high) { trim(); }
    explicit Poly(std::vector<C> low_to_high) : c_(std::move(low_to_high)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(C v) {
        Poly p;
        if (!RingOps<C>::is_zero(v)) p.c_.push_back(std::move(v));
        return p;
    }
    // c * X^k
    static Poly monomial(C coeff, std::size_t k) {
        Poly p;
        if (!RingOps<C>::is_zero(coeff)) {
            p.c_.assign(k, RingOps<C>::zero());
            p.c_.push_back(std::move(coeff));
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }

    const C& leading() const {
        if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
        return c_.back();
    }
    // Coefficient of X^i; zero beyond the stored range.
    C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : RingOps<C>::zero(); }
    const std::vector<C>& coeffs() const { return c_; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = RingOps<C>::neg(x);
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<C> out(std::max(c_.size(), o.c_.size()), RingOps<C>::zero());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
        return Poly(std::move(out));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly& operator+=(const Poly& o) {
        *this = *this + o;
        return *this;
    }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<C> out(c_.size() + o.c_.size() - 1, RingOps<C>::zero());
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                out[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(out));
    }

    Poly scaled(const C& k) const {
        if (RingOps<C>::is_zero(k)) return Poly();
        Poly r = *this;
        for (auto& x : r.c_) x = x * k;
        r.trim();
        return r;
    }

    // *this * X^k
    Poly shifted(std::size_t k) const {
        if (is_zero()) return Poly();
        std::vector<C> out(k, RingOps<C>::zero());
        out.insert(out.end(), c_.begin(), c_.end());
        return Poly(std::move(out));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<C> out;
        out.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * C(static_cast<long>(i)));
        return Poly(std::move(out));
    }

    // Horner evaluation into a (possibly wider) ring V.
    template <typename V>
    V eval(const V& x) const {
        V acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + V(*it);
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && RingOps<C>::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<C> c_;
};

using IntPolynomial = Poly<BigInt>;
using RatPolynomial = Poly<Rational>;

template <>
struct RingOps<BigInt> {
    static BigInt zero() { return BigInt(0); }
    static BigInt one() { return BigInt(1); }
    static bool is_zero(const BigInt& a) { return sign_of(a) == 0; }
    static BigInt neg(const BigInt& a) { return -a; }
    static BigInt exact_div(const BigInt& a, const BigInt& b) { return realroots::exact_div(a, b); }
};

template <>
struct RingOps<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& a) { return a.is_zero(); }
    static Rational neg(const Rational& a) { return -a; }
    static Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
};

template <>
struct RingOps<IntPolynomial> {
    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial one() { return IntPolynomial::constant(BigInt(1)); }
    static bool is_zero(const IntPolynomial& a) { return a.is_zero(); }
    static IntPolynomial neg(const IntPolynomial& a) { return -a; }
    static IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b);
};

// ---- conversions ----

RatPolynomial to_rational(const IntPolynomial& p);

// Least positive d such that d*p has integer coefficients, together with d*p.
std::pair<IntPolynomial, BigInt> clear_denominators(const RatPolynomial& p);

// ---- integer polynomial utilities ----

// Exact value P(x) by Horner's rule.
Rational eval_at_rational(const IntPolynomial& p, const Rational& x);

int sign_at_rational(const IntPolynomial& p, const Rational& x);

// (content, primitive part): content > 0, primitive part with positive leading
// coefficient, content * primitive = +-P. DomainError on the zero polynomial.
std::pair<BigInt, IntPolynomial> content_and_primitive(const IntPolynomial& p);

// Primitive part with positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);

// Exact division in Z[X]; InternalError if not exact.
IntPolynomial exact_div_poly(const IntPolynomial& a, const IntPolynomial& b);

// Division in Q[X]: f = q*g + r with deg r < deg g.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& f, const RatPolynomial& g);

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = Q*g + R; returns R.
template <typename C>
Poly<C> pseudo_rem(const Poly<C>& f, const Poly<C>& g) {
    if (g.is_zero()) throw DivisionByZero("pseudo_rem by zero polynomial");
    int e = f.degree() - g.degree() + 1;
    const C b = g.leading();
    Poly<C> r = f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        std::size_t d = static_cast<std::size_t>(r.degree() - g.degree());
        r = r.scaled(b) - g.scaled(r.leading()).shifted(d);
        --e;
    }
    for (; e > 0; --e) r = r.scaled(b);
    return r;
}

std::string to_string(const IntPolynomial& p, const std::string& var = "x");

}  // namespace realroots
