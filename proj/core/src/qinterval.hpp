/*
  qinterval.hpp  (internal)

  Exact rational interval arithmetic, used to certify nonzero signs cheaply
  before falling back to symbolic evaluation.
*/
#pragma once

#include <algorithm>

#include "realroots/numeric.hpp"
#include "realroots/polynomial.hpp"

namespace realroots::detail {

struct QInterval {
    Rational lo, hi;

    static QInterval point(const Rational& r) { return {r, r}; }

    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    int sign() const {
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
        return 0;  // undetermined / contains zero
    }

    QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    QInterval operator*(const QInterval& o) const {
        Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min({a, b, c, d}), std::max({a, b, c, d})};
    }
};

inline QInterval eval_interval(const IntPolynomial& p, const QInterval& x) {
    QInterval acc = QInterval::point(Rational(0));
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * x + QInterval::point(Rational(*it));
    }
    return acc;
}

}  // namespace realroots::detail
