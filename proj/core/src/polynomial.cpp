#include "realroots/polynomial.hpp"

#include <sstream>

namespace realroots {

IntPolynomial RingOps<IntPolynomial>::exact_div(const IntPolynomial& a, const IntPolynomial& b) {
    return exact_div_poly(a, b);
}

RatPolynomial to_rational(const IntPolynomial& p) {
    std::vector<Rational> c;
    c.reserve(p.size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return RatPolynomial(std::move(c));
}

std::pair<IntPolynomial, BigInt> clear_denominators(const RatPolynomial& p) {
    BigInt d(1);
    for (const auto& c : p.coeffs()) {
        BigInt den = c.den();
        d = d / gcd_of(d, den) * den;  // lcm
    }
    std::vector<BigInt> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) out.push_back(c.num() * exact_div(d, c.den()));
    return {IntPolynomial(std::move(out)), d};
}

Rational eval_at_rational(const IntPolynomial& p, const Rational& x) {
    return p.eval<Rational>(x);
}

int sign_at_rational(const IntPolynomial& p, const Rational& x) {
    return eval_at_rational(p, x).sign();
}

std::pair<BigInt, IntPolynomial> content_and_primitive(const IntPolynomial& p) {
    if (p.is_zero()) throw DomainError("content of zero polynomial");
    BigInt g(0);
    for (const auto& c : p.coeffs()) g = gcd_of(g, c);
    // gcd_of yields a nonnegative value; p nonzero makes it positive
    int lead = sign_of(p.leading());
    std::vector<BigInt> prim;
    prim.reserve(p.size());
    for (const auto& c : p.coeffs()) prim.push_back(lead < 0 ? exact_div(-c, g) : exact_div(c, g));
    return {g, IntPolynomial(std::move(prim))};
}

IntPolynomial primitive_part(const IntPolynomial& p) { return content_and_primitive(p).second; }

IntPolynomial exact_div_poly(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw InternalError("exact_div_poly by zero");
    if (a.is_zero()) return IntPolynomial();
    if (a.degree() < b.degree()) throw InternalError("exact_div_poly: degree underflow");
    std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, BigInt(0));
    IntPolynomial r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        BigInt c = exact_div(r.leading(), b.leading());
        std::size_t d = static_cast<std::size_t>(r.degree() - b.degree());
        q[d] = c;
        r = r - b.scaled(c).shifted(d);
    }
    if (!r.is_zero()) throw InternalError("exact_div_poly: nonzero remainder");
    return IntPolynomial(std::move(q));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& f, const RatPolynomial& g) {
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    RatPolynomial q, r = f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        Rational c = r.leading() / g.leading();
        std::size_t d = static_cast<std::size_t>(r.degree() - g.degree());
        q = q + RatPolynomial::monomial(c, d);
        r = r - g.scaled(c).shifted(d);
    }
    return {q, r};
}

std::string to_string(const IntPolynomial& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        BigInt c = p.coeff(static_cast<std::size_t>(i));
        if (sign_of(c) == 0) continue;
        if (first) {
            if (sign_of(c) < 0) os << "-";
            first = false;
        } else {
            os << (sign_of(c) < 0 ? " - " : " + ");
        }
        BigInt a = abs_of(c);
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace realroots
