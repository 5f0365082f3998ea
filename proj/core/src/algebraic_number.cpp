#include "realroots/algebraic_number.hpp"

#include <algorithm>
#include <deque>

namespace realroots {

AlgebraicNumber::AlgebraicNumber(unchecked_t, IntPolynomial defining, Rational lo, Rational hi,
                                 std::optional<Rational> exact)
    : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)),
      exact_(std::move(exact)) {}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& r) {
    // defining polynomial den*X - num, primitive with positive leading coefficient
    IntPolynomial p({-r.num(), r.den()});
    return AlgebraicNumber(unchecked_t{}, primitive_part(p), r, r, r);
}

AlgebraicNumber::AlgebraicNumber(const IntPolynomial& defining, const Rational& lo,
                                 const Rational& hi) {
    if (defining.degree() < 1)
        throw PreconditionError("algebraic number: defining polynomial must be nonconstant");
    if (!is_square_free(defining))
        throw PreconditionError("algebraic number: defining polynomial must be square-free");
    if (hi < lo) throw PreconditionError("algebraic number: needs lo <= hi");
    IntPolynomial p = primitive_part(defining);
    if (p.degree() == 1) {
        Rational root(-p.coeff(0), p.leading());
        if (root < lo || hi < root)
            throw PreconditionError("algebraic number: root outside interval");
        *this = from_rational(root);
        return;
    }
    const int s_lo = sign_at_rational(p, lo);
    if (lo == hi) {
        if (s_lo != 0) throw PreconditionError("algebraic number: point is not a root");
        *this = AlgebraicNumber(unchecked_t{}, std::move(p), lo, hi, lo);
        return;
    }
    const int s_hi = sign_at_rational(p, hi);
    const unsigned interior = count_real_roots(p, lo, hi);
    if (s_lo == 0 || s_hi == 0) {
        if (interior != 0)
            throw PreconditionError("algebraic number: interval holds more than one root");
        Rational root = (s_lo == 0) ? lo : hi;
        *this = AlgebraicNumber(unchecked_t{}, std::move(p), root, root, root);
        return;
    }
    if (interior != 1)
        throw PreconditionError("algebraic number: interval must isolate exactly one root");
    *this = AlgebraicNumber(unchecked_t{}, std::move(p), lo, hi, std::nullopt);
}

int AlgebraicNumber::derivative_sign() const {
    if (exact_) {
        return sign_at_rational(defining_.derivative(), *exact_);
    }
    return sign_at_rational(defining_, hi_);  // sign just right of a simple root
}

AlgebraicNumber refine(const AlgebraicNumber& alpha) {
    if (alpha.is_exact()) return alpha;
    const Rational mid = (alpha.lo() + alpha.hi()) * Rational(1, 2);
    const int sm = sign_at_rational(alpha.defining(), mid);
    if (sm == 0)
        return AlgebraicNumber(AlgebraicNumber::unchecked_t{}, alpha.defining(), mid, mid, mid);
    if (sign_at_rational(alpha.defining(), alpha.lo()) * sm < 0)
        return AlgebraicNumber(AlgebraicNumber::unchecked_t{}, alpha.defining(), alpha.lo(), mid,
                               std::nullopt);
    return AlgebraicNumber(AlgebraicNumber::unchecked_t{}, alpha.defining(), mid, alpha.hi(),
                           std::nullopt);
}

AlgebraicNumber refine_to_width(const AlgebraicNumber& alpha, const Rational& w) {
    AlgebraicNumber a = alpha;
    while (!a.is_exact() && w < a.width()) a = refine(a);
    return a;
}

// ---------------------------------------------------------------------------
// isolation
// ---------------------------------------------------------------------------

namespace {

struct WorkInterval {
    Rational lo, hi;
};

// Multiplicity of the root in (lo, hi) (or at `exact`) read off the Yun
// decomposition: exactly one factor changes sign over the isolating interval.
unsigned multiplicity_of(const SquareFreeDecomposition& sqf, const AlgebraicNumber& alpha) {
    for (const auto& f : sqf.factors) {
        if (alpha.is_exact()) {
            if (sign_at_rational(f.poly, alpha.exact_value()) == 0) return f.multiplicity;
        } else {
            if (sign_at_rational(f.poly, alpha.lo()) * sign_at_rational(f.poly, alpha.hi()) < 0)
                return f.multiplicity;
        }
    }
    throw InternalError("isolate_real_roots: no square-free factor matches a root");
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const IntPolynomial& f) {
    IsolationStats stats;
    return isolate_real_roots(f, stats);
}

std::vector<IsolatedRoot> isolate_real_roots(const IntPolynomial& f, IsolationStats& stats) {
    if (f.degree() < 1) throw DomainError("isolate_real_roots needs degree >= 1");
    stats.subdivisions = 0;

    IntPolynomial fred = square_free_part(f);
    const SquareFreeDecomposition sqf = square_free_factorization(f);

    std::vector<AlgebraicNumber> found;

    if (fred.degree() == 1) {
        found.push_back(AlgebraicNumber::from_rational(
            Rational(-fred.coeff(0), fred.leading())));
    } else {
        Rational bound = cauchy_root_bound(fred);
        while (sign_at_rational(fred, bound) == 0 || sign_at_rational(fred, -bound) == 0)
            bound += Rational(1);

        QuotientBoot sturm = stha_quotient_boot(fred, fred.derivative());
        std::deque<WorkInterval> queue;
        queue.push_back({-bound, bound});

        // exact rational roots discovered at midpoints deflate fred and force
        // a boot rebuild; counting then refers to the deflated polynomial
        while (!queue.empty()) {
            WorkInterval iv = queue.front();
            queue.pop_front();
            const unsigned n = count_real_roots(sturm, iv.lo, iv.hi);
            if (n == 0) continue;
            if (n == 1) {
                found.push_back(AlgebraicNumber(AlgebraicNumber::unchecked_t{}, fred, iv.lo,
                                                iv.hi, std::nullopt));
                continue;
            }
            const Rational mid = (iv.lo + iv.hi) * Rational(1, 2);
            ++stats.subdivisions;
            if (sign_at_rational(fred, mid) == 0) {
                found.push_back(AlgebraicNumber::from_rational(mid));
                // deflate the exact root: fred is square-free, so the linear
                // factor divides exactly once
                IntPolynomial linear({-mid.num(), mid.den()});
                fred = exact_div_poly(fred.scaled(mid.den()), linear);
                fred = primitive_part(fred);
                if (fred.degree() >= 1) {
                    // rebuild counting machinery for the deflated polynomial
                    sturm = stha_quotient_boot(
                        fred, fred.degree() >= 1 ? fred.derivative() : IntPolynomial());
                    queue.push_back({iv.lo, mid});
                    queue.push_back({mid, iv.hi});
                }
                continue;
            }
            queue.push_back({iv.lo, mid});
            queue.push_back({mid, iv.hi});
        }
    }

    std::sort(found.begin(), found.end(), [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
        if (a.lo() != b.lo()) return a.lo() < b.lo();
        return a.hi() < b.hi();
    });

    std::vector<IsolatedRoot> out;
    out.reserve(found.size());
    for (auto& alpha : found)
        out.push_back({alpha, multiplicity_of(sqf, alpha)});
    return out;
}

// ---------------------------------------------------------------------------
// sign evaluation and comparison
// ---------------------------------------------------------------------------

Sign sign_at(const IntPolynomial& Q, const AlgebraicNumber& alpha) {
    if (Q.is_zero()) return Sign::zero;
    if (alpha.is_exact()) return sign_from_int(sign_at_rational(Q, alpha.exact_value()));
    if (Q.degree() == 0) return sign_from_int(sign_of(Q.leading()));
    // sign(Q(alpha)) = Ind(Q/P; lo, hi) * sign(P'(alpha)): the Cauchy index over
    // the isolating interval has the single term sign(P'(alpha) Q(alpha)), and
    // vanishes exactly when alpha is a root of Q
    const long ind =
        detail::cauchy_index(alpha.defining(), Q, alpha.lo(), alpha.hi());
    return sign_from_int(static_cast<int>(ind) * alpha.derivative_sign());
}

namespace {

Ordering ordering_from_int(int s) {
    return s < 0 ? Ordering::LT : (s > 0 ? Ordering::GT : Ordering::EQ);
}

// sign(alpha - r) for algebraic alpha and rational r
int compare_to_rational(const AlgebraicNumber& alpha, const Rational& r) {
    if (alpha.is_exact()) {
        const Rational& v = alpha.exact_value();
        return v < r ? -1 : (r < v ? 1 : 0);
    }
    IntPolynomial linear({-r.num(), r.den()});
    return to_int(sign_at(linear, alpha));
}

}  // namespace

Ordering compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (b.is_exact()) return ordering_from_int(compare_to_rational(a, b.exact_value()));
    if (a.is_exact()) return ordering_from_int(-compare_to_rational(b, a.exact_value()));
    if (a.hi() <= b.lo()) return Ordering::LT;  // both roots are interval-interior
    if (b.hi() <= a.lo()) return Ordering::GT;
    // locate a relative to b's interval with exact sign tests
    if (compare_to_rational(a, b.lo()) <= 0) return Ordering::LT;
    if (compare_to_rational(a, b.hi()) >= 0) return Ordering::GT;
    // a lies strictly inside b's interval, where b is the unique simple root
    // of its defining polynomial (Lem. 25 configuration)
    const Sign s = sign_at(b.defining(), a);
    if (s == Sign::zero) return Ordering::EQ;
    return to_int(s) == b.derivative_sign() ? Ordering::GT : Ordering::LT;
}

std::vector<Rational> separating_rationals(const std::vector<AlgebraicNumber>& roots) {
    if (roots.empty()) return {Rational(0)};
    for (std::size_t i = 0; i + 1 < roots.size(); ++i)
        if (compare(roots[i], roots[i + 1]) != Ordering::LT)
            throw PreconditionError("separating_rationals: roots must be strictly increasing");

    std::vector<AlgebraicNumber> rs = roots;
    // refine until pairwise disjoint (closed intervals may touch at one point)
    for (std::size_t i = 0; i + 1 < rs.size(); ++i) {
        while (true) {
            const Rational& ahi = rs[i].hi();
            const Rational& blo = rs[i + 1].lo();
            if (ahi < blo) break;
            if (ahi == blo && !(rs[i].is_exact() || rs[i + 1].is_exact())) break;
            if (rs[i].width() >= rs[i + 1].width() && !rs[i].is_exact()) {
                rs[i] = refine(rs[i]);
            } else if (!rs[i + 1].is_exact()) {
                rs[i + 1] = refine(rs[i + 1]);
            } else {
                rs[i] = refine(rs[i]);
            }
        }
    }

    std::vector<Rational> out;
    out.reserve(rs.size() + 1);
    out.push_back(rs.front().is_exact() ? rs.front().exact_value() - Rational(1)
                                        : rs.front().lo());
    for (std::size_t i = 0; i + 1 < rs.size(); ++i) {
        const Rational hi_i = rs[i].is_exact() ? rs[i].exact_value() : rs[i].hi();
        const Rational lo_n = rs[i + 1].is_exact() ? rs[i + 1].exact_value() : rs[i + 1].lo();
        out.push_back((hi_i + lo_n) * Rational(1, 2));
    }
    out.push_back(rs.back().is_exact() ? rs.back().exact_value() + Rational(1) : rs.back().hi());
    return out;
}

std::vector<IsolatedRoot> satisfy_univariate(const IntPolynomial& P,
                                             const std::vector<IntPolynomial>& gt,
                                             const std::vector<IntPolynomial>& lt,
                                             const std::vector<IntPolynomial>& eq) {
    if (P.degree() < 1) throw DomainError("satisfy_univariate needs degree >= 1");
    std::vector<IsolatedRoot> out;
    for (const auto& root : isolate_real_roots(P)) {
        bool ok = true;
        for (const auto& A : gt)
            if (sign_at(A, root.number) != Sign::positive) { ok = false; break; }
        if (ok)
            for (const auto& B : lt)
                if (sign_at(B, root.number) != Sign::negative) { ok = false; break; }
        if (ok)
            for (const auto& C : eq)
                if (sign_at(C, root.number) != Sign::zero) { ok = false; break; }
        if (ok) out.push_back(root);
    }
    return out;
}

}  // namespace realroots
