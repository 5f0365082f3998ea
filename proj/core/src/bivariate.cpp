#include "realroots/bivariate.hpp"

#include <algorithm>
#include <map>

#include "qinterval.hpp"

namespace realroots {

// ---------------------------------------------------------------------------
// BivariatePolynomial
// ---------------------------------------------------------------------------

void BivariatePolynomial::trim() {
    while (!yc_.empty() && yc_.back().is_zero()) yc_.pop_back();
}

BivariatePolynomial::BivariatePolynomial(std::vector<IntPolynomial> y_coeffs)
    : yc_(std::move(y_coeffs)) {
    trim();
}

BivariatePolynomial BivariatePolynomial::from_terms(
    const std::vector<std::tuple<BigInt, unsigned, unsigned>>& terms) {
    unsigned maxj = 0;
    for (const auto& [c, i, j] : terms)
        if (sign_of(c) != 0 && j > maxj) maxj = j;
    std::vector<std::vector<BigInt>> rows(maxj + 1);
    for (const auto& [c, i, j] : terms) {
        if (sign_of(c) == 0) continue;
        auto& row = rows[j];
        if (row.size() <= i) row.resize(i + 1, BigInt(0));
        row[i] += c;
    }
    std::vector<IntPolynomial> yc;
    yc.reserve(rows.size());
    for (auto& r : rows) yc.emplace_back(std::move(r));
    return BivariatePolynomial(std::move(yc));
}

BivariatePolynomial BivariatePolynomial::from_univariate(const IntPolynomial& p, Var v) {
    if (v == Var::x) return BivariatePolynomial({p});
    std::vector<IntPolynomial> yc;
    yc.reserve(p.size());
    for (const auto& c : p.coeffs()) yc.push_back(IntPolynomial::constant(c));
    return BivariatePolynomial(std::move(yc));
}

int BivariatePolynomial::deg_x() const {
    int d = -1;
    for (const auto& c : yc_) d = std::max(d, c.degree());
    return d;
}

int BivariatePolynomial::total_degree() const {
    int d = -1;
    for (std::size_t j = 0; j < yc_.size(); ++j)
        if (!yc_[j].is_zero()) d = std::max(d, yc_[j].degree() + static_cast<int>(j));
    return d;
}

BigInt BivariatePolynomial::coefficient(unsigned i, unsigned j) const {
    if (j >= yc_.size()) return BigInt(0);
    return yc_[j].coeff(i);
}

Poly<IntPolynomial> BivariatePolynomial::as_poly(Var main) const {
    if (main == Var::y) return Poly<IntPolynomial>(yc_);
    return swapped().as_poly(Var::y);
}

BivariatePolynomial BivariatePolynomial::from_poly(const Poly<IntPolynomial>& p, Var main) {
    BivariatePolynomial b(p.coeffs());
    return main == Var::y ? b : b.swapped();
}

BivariatePolynomial BivariatePolynomial::swapped() const {
    const int dx = deg_x();
    std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(dx + 1));
    for (std::size_t j = 0; j < yc_.size(); ++j) {
        for (int i = 0; i <= yc_[j].degree(); ++i) {
            auto& row = rows[static_cast<std::size_t>(i)];
            if (row.size() <= j) row.resize(j + 1, BigInt(0));
            row[j] = yc_[j].coeff(static_cast<std::size_t>(i));
        }
    }
    std::vector<IntPolynomial> yc;
    yc.reserve(rows.size());
    for (auto& r : rows) yc.emplace_back(std::move(r));
    return BivariatePolynomial(std::move(yc));
}

RatPolynomial BivariatePolynomial::substitute_x(const Rational& x0) const {
    std::vector<Rational> out;
    out.reserve(yc_.size());
    for (const auto& c : yc_) out.push_back(eval_at_rational(c, x0));
    return RatPolynomial(std::move(out));
}

RatPolynomial BivariatePolynomial::substitute_y(const Rational& y0) const {
    return swapped().substitute_x(y0);
}

Rational BivariatePolynomial::evaluate(const Rational& x, const Rational& y) const {
    return substitute_x(x).eval<Rational>(y);
}

BivariatePolynomial BivariatePolynomial::derivative(Var v) const {
    if (v == Var::y) {
        std::vector<IntPolynomial> yc;
        for (std::size_t j = 1; j < yc_.size(); ++j)
            yc.push_back(yc_[j].scaled(BigInt(static_cast<long>(j))));
        return BivariatePolynomial(std::move(yc));
    }
    std::vector<IntPolynomial> yc;
    yc.reserve(yc_.size());
    for (const auto& c : yc_) yc.push_back(c.derivative());
    return BivariatePolynomial(std::move(yc));
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& o) const {
    std::vector<IntPolynomial> yc(std::max(yc_.size(), o.yc_.size()));
    for (std::size_t j = 0; j < yc.size(); ++j) {
        IntPolynomial a = j < yc_.size() ? yc_[j] : IntPolynomial();
        IntPolynomial b = j < o.yc_.size() ? o.yc_[j] : IntPolynomial();
        yc[j] = a + b;
    }
    return BivariatePolynomial(std::move(yc));
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& o) const {
    std::vector<IntPolynomial> yc(std::max(yc_.size(), o.yc_.size()));
    for (std::size_t j = 0; j < yc.size(); ++j) {
        IntPolynomial a = j < yc_.size() ? yc_[j] : IntPolynomial();
        IntPolynomial b = j < o.yc_.size() ? o.yc_[j] : IntPolynomial();
        yc[j] = a - b;
    }
    return BivariatePolynomial(std::move(yc));
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& o) const {
    return from_poly(as_poly(Var::y) * o.as_poly(Var::y), Var::y);
}

BivariatePolynomial BivariatePolynomial::sheared_x(long a) const {
    // X -> X + a*Y, expanded with iterated powers of (X + aY)
    BivariatePolynomial x_plus_ay =
        from_terms({{BigInt(1), 1, 0}, {BigInt(a), 0, 1}});
    BivariatePolynomial result;
    BivariatePolynomial xpow = from_terms({{BigInt(1), 0, 0}});  // (X+aY)^i
    const int dx = deg_x();
    for (int i = 0; i <= dx; ++i) {
        std::vector<IntPolynomial> slice;  // coefficient of X^i as polynomial in Y
        for (std::size_t j = 0; j < yc_.size(); ++j)
            slice.push_back(IntPolynomial::constant(yc_[j].coeff(static_cast<std::size_t>(i))));
        BivariatePolynomial in_y(std::move(slice));
        result = result + in_y * xpow;
        if (i < dx) xpow = xpow * x_plus_ay;
    }
    return result;
}

// ---------------------------------------------------------------------------
// resultants and sequences over the coefficient ring
// ---------------------------------------------------------------------------

namespace {

int parity_sign(long n) { return n % 2 == 0 ? 1 : -1; }

IntPolynomial poly_pow(const IntPolynomial& p, unsigned e) {
    IntPolynomial r = IntPolynomial::constant(BigInt(1));
    for (unsigned i = 0; i < e; ++i) r = r * p;
    return r;
}

// Bareiss fraction-free determinant over Z[X].
IntPolynomial bareiss_det(std::vector<std::vector<IntPolynomial>> m) {
    const std::size_t n = m.size();
    if (n == 0) return IntPolynomial::constant(BigInt(1));
    int sign = 1;
    IntPolynomial prev = IntPolynomial::constant(BigInt(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv == k) return IntPolynomial();
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div_poly(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    IntPolynomial d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

IntPolynomial sylvester_resultant_over_ring(const Poly<IntPolynomial>& A,
                                            const Poly<IntPolynomial>& B) {
    const int p = A.degree(), q = B.degree();
    const std::size_t n = static_cast<std::size_t>(p + q);
    std::vector<std::vector<IntPolynomial>> m(n, std::vector<IntPolynomial>(n, IntPolynomial()));
    for (int r = 0; r < q; ++r)
        for (int i = 0; i <= p; ++i)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] =
                A.coeff(static_cast<std::size_t>(p - i));
    for (int r = 0; r < p; ++r)
        for (int i = 0; i <= q; ++i)
            m[static_cast<std::size_t>(q + r)][static_cast<std::size_t>(r + i)] =
                B.coeff(static_cast<std::size_t>(q - i));
    return bareiss_det(std::move(m));
}

}  // namespace

IntPolynomial bivar_resultant(const BivariatePolynomial& F, const BivariatePolynomial& G,
                              Var var) {
    if (F.is_zero() || G.is_zero()) throw DomainError("bivar_resultant of zero polynomial");
    Poly<IntPolynomial> A = F.as_poly(var);
    Poly<IntPolynomial> B = G.as_poly(var);
    const int p = A.degree(), q = B.degree();
    if (p == 0 && q == 0) throw DomainError("bivar_resultant: both constant in the variable");
    if (q == 0) return poly_pow(B.coeff(0), static_cast<unsigned>(p));
    if (p == 0) return poly_pow(A.coeff(0), static_cast<unsigned>(q));
    if (p == q) return sylvester_resultant_over_ring(A, B);
    if (p < q) {
        IntPolynomial r = bivar_resultant(G, F, var);
        return parity_sign(static_cast<long>(p) * q) < 0 ? -r : r;
    }
    auto chain = signed_subresultant_chain<IntPolynomial>(A, B);
    IntPolynomial h0 = chain.elems[0].is_zero() ? IntPolynomial() : chain.elems[0].coeff(0);
    return parity_sign(static_cast<long>(p) * (p - 1) / 2) < 0 ? -h0 : h0;
}

BivarStHaSequence bivar_stha_sequence(const BivariatePolynomial& F,
                                      const BivariatePolynomial& G, Var var) {
    if (F.is_zero()) throw PreconditionError("bivar_stha_sequence: F is zero");
    Poly<IntPolynomial> A = F.as_poly(var);
    BivarStHaSequence out;
    out.main = var;
    if (G.is_zero()) {
        out.polys.assign(static_cast<std::size_t>(A.degree()) + 1, BivariatePolynomial());
        out.principal.assign(static_cast<std::size_t>(A.degree()) + 1, IntPolynomial());
        out.polys[static_cast<std::size_t>(A.degree())] = F;
        out.principal[static_cast<std::size_t>(A.degree())] = IntPolynomial::constant(BigInt(1));
        return out;
    }
    Poly<IntPolynomial> B = G.as_poly(var);
    if (A.degree() <= B.degree())
        throw PreconditionError("bivar_stha_sequence: needs deg_var F > deg_var G");
    auto chain = signed_subresultant_chain<IntPolynomial>(A, B);
    out.polys.reserve(chain.elems.size());
    for (const auto& e : chain.elems) out.polys.push_back(BivariatePolynomial::from_poly(e, var));
    out.principal = std::move(chain.principal);
    return out;
}

// ---------------------------------------------------------------------------
// bivariate sign evaluation
// ---------------------------------------------------------------------------

namespace {

// sign of the (rational-coefficient) polynomial at beta, via denominator clearing
Sign sign_at_cleared(const RatPolynomial& q, const AlgebraicNumber& beta) {
    if (q.is_zero()) return Sign::zero;
    return sign_at(clear_denominators(q).first, beta);
}

// substitute X = x0 into a chain element (main variable X, coefficients in Y)
RatPolynomial substitute_main(const Poly<IntPolynomial>& h, const Rational& x0) {
    // Horner in X over polynomials in Y with rational scalars
    RatPolynomial acc;
    for (auto it = h.coeffs().rbegin(); it != h.coeffs().rend(); ++it) {
        RatPolynomial term = to_rational(*it);
        acc = acc.scaled(x0) + term;
    }
    return acc;
}

Sign bivar_sign_at_symbolic(const BivariatePolynomial& F, const AlgebraicNumber& alpha,
                            const AlgebraicNumber& beta) {
    const IntPolynomial& A = alpha.defining();
    Poly<IntPolynomial> Ax;  // A embedded into (Z[Y])[X]
    {
        std::vector<IntPolynomial> cs;
        cs.reserve(A.size());
        for (const auto& c : A.coeffs()) cs.push_back(IntPolynomial::constant(c));
        Ax = Poly<IntPolynomial>(std::move(cs));
    }
    Poly<IntPolynomial> R = F.as_poly(Var::x);
    int sign_fix = 1;
    if (R.degree() >= Ax.degree()) {
        const int e = R.degree() - Ax.degree() + 1;
        if (e % 2 != 0 && sign_of(A.leading()) < 0) sign_fix = -1;
        R = pseudo_rem(R, Ax);  // lc(A)^e * F = Q*A + R
    }
    // drop leading X-coefficients vanishing at beta so that specializing
    // Y -> beta preserves the X-degree
    while (!R.is_zero() && sign_at(R.leading(), beta) == Sign::zero) {
        std::vector<IntPolynomial> cs(R.coeffs().begin(), R.coeffs().end() - 1);
        R = Poly<IntPolynomial>(std::move(cs));
    }
    if (R.is_zero()) return Sign::zero;
    if (R.degree() == 0)
        return sign_from_int(sign_fix * to_int(sign_at(R.coeff(0), beta)));

    auto chain = signed_subresultant_chain<IntPolynomial>(Ax, R);
    auto w_at = [&](const Rational& x0) {
        SignSequence seq;
        seq.signs.reserve(chain.elems.size());
        for (int j = chain.top(); j >= 0; --j) {
            const auto& h = chain.elems[j];
            if (h.is_zero()) {
                seq.signs.push_back(0);
            } else {
                seq.signs.push_back(to_int(sign_at_cleared(substitute_main(h, x0), beta)));
            }
        }
        return modified_sign_variations(seq);
    };
    const long ind = static_cast<long>(w_at(alpha.lo())) - static_cast<long>(w_at(alpha.hi()));
    return sign_from_int(sign_fix * static_cast<int>(ind) * alpha.derivative_sign());
}

detail::QInterval enclosure(const AlgebraicNumber& a) {
    if (a.is_exact()) return detail::QInterval::point(a.exact_value());
    return {a.lo(), a.hi()};
}

// interval evaluation of F over the box; decisive only for nonzero signs
int interval_sign(const BivariatePolynomial& F, const detail::QInterval& x,
                  const detail::QInterval& y) {
    detail::QInterval acc = detail::QInterval::point(Rational(0));
    for (auto it = F.y_coeffs().rbegin(); it != F.y_coeffs().rend(); ++it)
        acc = acc * y + detail::eval_interval(*it, x);
    return acc.sign();
}

}  // namespace

Sign bivar_sign_at(const BivariatePolynomial& F, const AlgebraicNumber& alpha,
                   const AlgebraicNumber& beta) {
    if (F.is_zero()) return Sign::zero;
    if (alpha.is_exact()) return sign_at_cleared(F.substitute_x(alpha.exact_value()), beta);
    if (beta.is_exact()) return sign_at_cleared(F.substitute_y(beta.exact_value()), alpha);

    // certified interval filter; zero values always fall through to the
    // symbolic path
    AlgebraicNumber a = alpha, b = beta;
    for (int round = 0; round < 24; ++round) {
        const int s = interval_sign(F, enclosure(a), enclosure(b));
        if (s != 0) return sign_from_int(s);
        if (b.is_exact() || (!a.is_exact() && b.width() < a.width())) {
            a = refine(a);
        } else {
            b = refine(b);
        }
        if (a.is_exact() || b.is_exact()) return bivar_sign_at(F, a, b);
    }
    return bivar_sign_at_symbolic(F, a, b);
}

// ---------------------------------------------------------------------------
// system solving
// ---------------------------------------------------------------------------

namespace {

IntPolynomial y_content(const BivariatePolynomial& F) {
    IntPolynomial c;
    for (const auto& yc : F.y_coeffs()) {
        if (yc.is_zero()) continue;
        c = c.is_zero() ? primitive_part(yc) : gcd(c, yc);
        if (c.degree() == 0) break;
    }
    return c;
}

struct Candidates {
    std::vector<AlgebraicNumber> xs, ys;
};

Candidates candidate_coordinates(const BivariatePolynomial& F, const BivariatePolynomial& G) {
    if (F.is_zero() || G.is_zero())
        throw CommonComponentError("naive_solve: zero polynomial input");
    // components of positive degree in one variable only escape the resultant
    // test; catch them through the contents
    if (gcd(y_content(F), y_content(G)).degree() >= 1)
        throw CommonComponentError("naive_solve: common vertical-line component");
    if (gcd(y_content(F.swapped()), y_content(G.swapped())).degree() >= 1)
        throw CommonComponentError("naive_solve: common horizontal-line component");
    IntPolynomial rx = bivar_resultant(F, G, Var::y);
    if (rx.is_zero()) throw CommonComponentError("naive_solve: Res_Y(F, G) is identically zero");
    IntPolynomial ry = bivar_resultant(F, G, Var::x);
    if (ry.is_zero()) throw CommonComponentError("naive_solve: Res_X(F, G) is identically zero");

    Candidates out;
    if (rx.degree() >= 1)
        for (auto& r : isolate_real_roots(rx)) out.xs.push_back(std::move(r.number));
    if (ry.degree() >= 1)
        for (auto& r : isolate_real_roots(ry)) out.ys.push_back(std::move(r.number));
    return out;
}

}  // namespace

std::vector<SystemSolution> naive_solve(const BivariatePolynomial& F,
                                        const BivariatePolynomial& G) {
    Candidates cand = candidate_coordinates(F, G);
    std::vector<SystemSolution> out;
    for (const auto& alpha : cand.xs) {
        for (const auto& beta : cand.ys) {
            if (bivar_sign_at(F, alpha, beta) != Sign::zero) continue;
            if (bivar_sign_at(G, alpha, beta) != Sign::zero) continue;
            out.push_back({alpha, beta, std::nullopt});
        }
    }
    return out;  // xs and ys increasing, so (x, y)-lexicographic already
}

bool generic_position_check(const BivariatePolynomial& F, const BivariatePolynomial& G) {
    std::vector<SystemSolution> sols = naive_solve(F, G);
    for (std::size_t i = 0; i + 1 < sols.size(); ++i) {
        // solutions over the same root reuse the identical interval
        if (sols[i].x.lo() == sols[i + 1].x.lo() && sols[i].x.hi() == sols[i + 1].x.hi() &&
            compare(sols[i].x, sols[i + 1].x) == Ordering::EQ)
            return false;
    }
    return true;
}

std::vector<SystemSolution> rur_solve(const BivariatePolynomial& F,
                                      const BivariatePolynomial& G,
                                      std::optional<long> shear) {
    BivariatePolynomial F0 = F, G0 = G;
    if (shear && *shear != 0) {
        F0 = F.sheared_x(*shear);
        G0 = G.sheared_x(*shear);
    }

    // reference solutions; also powers the generic-position test
    std::vector<SystemSolution> reference = naive_solve(F0, G0);
    for (std::size_t i = 0; i + 1 < reference.size(); ++i) {
        if (compare(reference[i].x, reference[i + 1].x) == Ordering::EQ)
            throw GenericPositionError(
                shear ? "rur_solve: system not in generic position after shear"
                      : "rur_solve: system not in generic position (supply a shear)");
    }
    if (reference.empty()) return {};

    // order so that deg_Y F0 >= deg_Y G0, then enforce strict order by one
    // leading-coefficient combination step
    Poly<IntPolynomial> A = F0.as_poly(Var::y);
    Poly<IntPolynomial> B = G0.as_poly(Var::y);
    if (A.degree() < B.degree()) std::swap(A, B);
    std::vector<IntPolynomial> lc_guards{A.leading()};
    if (A.degree() == B.degree()) {
        lc_guards.push_back(B.leading());
        Poly<IntPolynomial> C = B.scaled(A.leading()) - A.scaled(B.leading());
        if (C.is_zero())
            throw CommonComponentError("rur_solve: proportional leading forms");
        B = C;
    }
    if (B.degree() < 0) throw GenericPositionError("rur_solve: degenerate pair");
    if (B.degree() >= 1) lc_guards.push_back(B.leading());
    if (A.degree() <= B.degree())
        throw GenericPositionError("rur_solve: could not order the pair by Y-degree");
    auto chain = signed_subresultant_chain<IntPolynomial>(A, B);

    // intermediate rationals interleaving the y-candidates
    std::vector<AlgebraicNumber> ys;
    {
        IntPolynomial ry = bivar_resultant(F0, G0, Var::x);
        if (ry.degree() >= 1)
            for (auto& r : isolate_real_roots(ry)) ys.push_back(std::move(r.number));
    }
    std::vector<Rational> qs = separating_rationals(ys);

    std::vector<SystemSolution> out;
    std::size_t ref_idx = 0;
    while (ref_idx < reference.size()) {
        const AlgebraicNumber& alpha = reference[ref_idx].x;

        for (const auto& g : lc_guards) {
            if (g.degree() >= 1 && sign_at(g, alpha) == Sign::zero)
                throw GenericPositionError(
                    "rur_solve: a leading coefficient vanishes at a solution abscissa");
        }

        // h_0(alpha) = ... = h_{k-1}(alpha) = 0, h_k(alpha) != 0
        int k = -1;
        for (int j = 1; j <= chain.top(); ++j) {
            const IntPolynomial& hj = chain.principal[j];
            if (hj.is_zero()) continue;
            if (sign_at(hj, alpha) != Sign::zero) {
                k = j;
                break;
            }
        }
        if (k < 0) throw GenericPositionError("rur_solve: no nonvanishing principal coefficient");

        const Poly<IntPolynomial>& Hk = chain.elems[k];
        IntPolynomial numerator = -Hk.coeff(static_cast<std::size_t>(k - 1));
        IntPolynomial denominator = Hk.coeff(static_cast<std::size_t>(k)).scaled(BigInt(k));

        // find j with q_j < numerator(alpha)/denominator(alpha) < q_{j+1}
        const int s_den = to_int(sign_at(denominator, alpha));
        auto sign_v_minus = [&](const Rational& q) {
            IntPolynomial u = numerator.scaled(q.den()) - denominator.scaled(q.num());
            return to_int(sign_at(u, alpha)) * s_den;
        };
        int found = -1;
        for (std::size_t j = 0; j + 1 < qs.size(); ++j) {
            if (sign_v_minus(qs[j]) > 0 && sign_v_minus(qs[j + 1]) < 0) {
                found = static_cast<int>(j);
                break;
            }
        }
        if (found < 0)
            throw GenericPositionError("rur_solve: lifted ordinate matches no real candidate");
        const AlgebraicNumber& beta = ys[static_cast<std::size_t>(found)];

        if (bivar_sign_at(F0, alpha, beta) != Sign::zero ||
            bivar_sign_at(G0, alpha, beta) != Sign::zero)
            throw GenericPositionError("rur_solve: lifted solution fails certification");

        out.push_back({alpha, beta,
                       RurWitness{static_cast<unsigned>(k), numerator, denominator}});

        // skip any further reference solutions over the same alpha (none in
        // generic position; loop kept simple)
        ++ref_idx;
    }
    return out;
}

std::vector<SystemSolution> satisfy_bivariate(const BivariatePolynomial& P,
                                              const BivariatePolynomial& Q,
                                              const std::vector<BivariatePolynomial>& gt,
                                              const std::vector<BivariatePolynomial>& lt,
                                              const std::vector<BivariatePolynomial>& eq) {
    std::vector<SystemSolution> out;
    for (auto& sol : naive_solve(P, Q)) {
        bool ok = true;
        for (const auto& A : gt)
            if (bivar_sign_at(A, sol.x, sol.y) != Sign::positive) { ok = false; break; }
        if (ok)
            for (const auto& B : lt)
                if (bivar_sign_at(B, sol.x, sol.y) != Sign::negative) { ok = false; break; }
        if (ok)
            for (const auto& C : eq)
                if (bivar_sign_at(C, sol.x, sol.y) != Sign::zero) { ok = false; break; }
        if (ok) out.push_back(std::move(sol));
    }
    return out;
}

bool bivar_is_square_free(const BivariatePolynomial& F) {
    if (F.is_zero()) return false;
    IntPolynomial c = y_content(F);
    if (c.degree() >= 1 && !is_square_free(c)) return false;
    if (F.deg_y() == 0) return true;
    // primitive part w.r.t. Y
    std::vector<IntPolynomial> pp;
    pp.reserve(F.y_coeffs().size());
    for (const auto& yc : F.y_coeffs())
        pp.push_back(yc.is_zero() ? IntPolynomial() : exact_div_poly(yc, c));
    BivariatePolynomial P(std::move(pp));
    if (P.deg_y() == 0) return true;
    return !bivar_resultant(P, P.derivative(Var::y), Var::y).is_zero();
}

}  // namespace realroots
