#include "realroots/extension_field.hpp"

namespace realroots {

namespace {

// reduce p/den modulo the defining polynomial over Q, then clear denominators
std::pair<IntPolynomial, BigInt> reduce_mod(const IntPolynomial& p, const BigInt& den,
                                            const IntPolynomial& defining) {
    RatPolynomial r = to_rational(p);
    if (p.degree() >= defining.degree())
        r = divmod(r, to_rational(defining)).second;
    auto [ip, d] = clear_denominators(r);
    return {ip, d * den};
}

}  // namespace

ExtFieldElement::ExtFieldElement(raw_t, AlgebraicNumber base, IntPolynomial poly, BigInt den)
    : base_(std::move(base)), poly_(std::move(poly)), den_(std::move(den)) {
    normalize();
}

ExtFieldElement::ExtFieldElement(AlgebraicNumber base, const IntPolynomial& poly,
                                 const BigInt& den) : base_(std::move(base)), den_(1) {
    if (sign_of(den) == 0) throw DivisionByZero("extension field element with zero denominator");
    auto [p, d] = reduce_mod(poly, abs_of(den), base_.defining());
    poly_ = std::move(p);
    den_ = sign_of(den) < 0 ? BigInt(-d) : d;
    if (sign_of(den_) < 0) {
        poly_ = -poly_;
        den_ = -den_;
    }
    normalize();
}

void ExtFieldElement::normalize() {
    if (poly_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = den_;
    for (const auto& c : poly_.coeffs()) g = gcd_of(g, c);
    if (g > 1) {
        std::vector<BigInt> cs;
        cs.reserve(poly_.size());
        for (const auto& c : poly_.coeffs()) cs.push_back(exact_div(c, g));
        poly_ = IntPolynomial(std::move(cs));
        den_ = exact_div(den_, g);
    }
}

ExtFieldElement ExtFieldElement::from_rational(const AlgebraicNumber& base, const Rational& r) {
    return ExtFieldElement(base, IntPolynomial::constant(r.num()), r.den());
}

ExtFieldElement ExtFieldElement::generator(const AlgebraicNumber& base) {
    return ExtFieldElement(base, IntPolynomial::monomial(BigInt(1), 1));
}

bool ExtFieldElement::same_base(const ExtFieldElement& o) const {
    if (!(base_.defining() == o.base_.defining())) return false;
    if (base_.is_exact() != o.base_.is_exact()) return false;
    if (base_.is_exact()) return base_.exact_value() == o.base_.exact_value();
    return base_.lo() == o.base_.lo() && base_.hi() == o.base_.hi();
}

namespace {

void require_same_base(const ExtFieldElement& u, const ExtFieldElement& v) {
    if (!u.same_base(v))
        throw BaseMismatchError("extension field operands anchored to different bases");
}

}  // namespace

ExtFieldElement extfield_add(const ExtFieldElement& u, const ExtFieldElement& v) {
    require_same_base(u, v);
    IntPolynomial p = u.poly().scaled(v.den()) + v.poly().scaled(u.den());
    return ExtFieldElement(u.base(), p, u.den() * v.den());
}

ExtFieldElement extfield_sub(const ExtFieldElement& u, const ExtFieldElement& v) {
    require_same_base(u, v);
    IntPolynomial p = u.poly().scaled(v.den()) - v.poly().scaled(u.den());
    return ExtFieldElement(u.base(), p, u.den() * v.den());
}

ExtFieldElement extfield_mul(const ExtFieldElement& u, const ExtFieldElement& v) {
    require_same_base(u, v);
    return ExtFieldElement(u.base(), u.poly() * v.poly(), u.den() * v.den());
}

Sign extfield_sign(const ExtFieldElement& u) {
    return sign_at(u.poly(), u.base());  // positive denominator cannot change the sign
}

ExtFieldElement extfield_rebase(const ExtFieldElement& u, const AlgebraicNumber& new_base) {
    return ExtFieldElement(new_base, u.poly(), u.den());
}

namespace {

// extended gcd in Q[X]: returns (g, s) with s*a = g mod b, g = gcd(a, b) monic-free
std::pair<RatPolynomial, RatPolynomial> half_xgcd(const RatPolynomial& a, const RatPolynomial& b) {
    RatPolynomial r0 = a, r1 = b;
    RatPolynomial s0 = RatPolynomial::constant(Rational(1)), s1;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RatPolynomial s2 = s0 - q * s1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
    }
    return {r0, s0};
}

}  // namespace

ExtFieldElement extfield_inverse(const ExtFieldElement& u) {
    if (extfield_sign(u) == Sign::zero)
        throw DivisionByZero("inverse of zero in extension field");
    ExtFieldElement cur = u;
    for (;;) {
        const IntPolynomial& P = cur.base().defining();
        auto [g, s] = half_xgcd(to_rational(cur.poly()), to_rational(P));
        if (g.degree() == 0) {
            // s * poly = g (const) mod P  =>  1/(poly/den) = den * s / g
            RatPolynomial inv = s.scaled(Rational(cur.den()) / g.leading());
            auto [ip, d] = clear_denominators(inv);
            return ExtFieldElement(cur.base(), ip, d);
        }
        // zero divisor: the defining polynomial is not minimal. cur is nonzero,
        // so alpha is a root of the cofactor; split and retry.
        IntPolynomial gz = primitive_part(clear_denominators(g).first);
        IntPolynomial cofactor = exact_div_poly(primitive_part(P), gz);
        AlgebraicNumber rebased =
            cur.base().is_exact()
                ? AlgebraicNumber(cofactor, cur.base().exact_value(), cur.base().exact_value())
                : AlgebraicNumber(AlgebraicNumber::unchecked_t{}, cofactor, cur.base().lo(),
                                  cur.base().hi(), std::nullopt);
        cur = extfield_rebase(cur, rebased);
    }
}

}  // namespace realroots
