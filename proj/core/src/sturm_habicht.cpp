#include "realroots/sturm_habicht.hpp"

#include <algorithm>

namespace realroots {

SturmHabichtSequence stha_sequence(const IntPolynomial& A, const IntPolynomial& B) {
    if (A.is_zero()) throw PreconditionError("stha_sequence: A is zero");
    SturmHabichtSequence out;
    const int p = A.degree();
    if (B.is_zero()) {
        out.polys.assign(static_cast<std::size_t>(p) + 1, IntPolynomial());
        out.principal.assign(static_cast<std::size_t>(p) + 1, BigInt(0));
        out.polys[p] = A;
        out.principal[p] = 1;
        return out;
    }
    if (p <= B.degree()) throw PreconditionError("stha_sequence: needs deg A > deg B");
    auto chain = signed_subresultant_chain<BigInt>(A, B);
    out.polys = std::move(chain.elems);
    out.principal = std::move(chain.principal);
    return out;
}

namespace {

// Signed polynomial remainder sequence over Q together with its quotients:
// R_0 = A, R_1 = B, R_{i+1} = -rem(R_{i-1}, R_i); Q_i = quo(R_i, R_{i+1}).
struct SignedPrs {
    std::vector<RatPolynomial> elems;
    std::vector<RatPolynomial> quotients;
};

SignedPrs signed_prs(const IntPolynomial& A, const IntPolynomial& B) {
    SignedPrs out;
    out.elems.push_back(to_rational(A));
    out.elems.push_back(to_rational(B));
    while (true) {
        const auto& prev = out.elems[out.elems.size() - 2];
        const auto& cur = out.elems.back();
        auto [q, r] = divmod(prev, cur);
        out.quotients.push_back(q);
        if (r.is_zero()) break;
        out.elems.push_back(-r);
    }
    return out;
}

int rat_poly_sign_at_infinity(int degree, int lc_sign, bool positive) {
    if (degree < 0) return 0;
    if (positive) return lc_sign;
    return degree % 2 == 0 ? lc_sign : -lc_sign;
}

}  // namespace

QuotientBoot stha_quotient_boot(const IntPolynomial& A, const IntPolynomial& B) {
    if (A.is_zero()) throw PreconditionError("stha_quotient_boot: A is zero");
    QuotientBoot boot;
    const int p = A.degree();
    boot.elements.assign(static_cast<std::size_t>(p) + 1, std::nullopt);
    if (B.is_zero()) {
        boot.last = A;
        boot.last_index = p;
        boot.sprs_size = 1;
        boot.elements[p] = QuotientBoot::ElementRef{0, Rational(1), p, sign_of(A.leading())};
        return boot;
    }
    if (p <= B.degree()) throw PreconditionError("stha_quotient_boot: needs deg A > deg B");

    auto chain = signed_subresultant_chain<BigInt>(A, B);
    SignedPrs prs = signed_prs(A, B);
    boot.quotients = prs.quotients;
    boot.sprs_size = static_cast<int>(prs.elems.size());

    for (int j = p; j >= 0; --j) {
        const IntPolynomial& hj = chain.elems[j];
        if (hj.is_zero()) continue;
        const int dj = hj.degree();
        int idx = -1;
        for (std::size_t i = 0; i < prs.elems.size(); ++i) {
            if (prs.elems[i].degree() == dj) {
                idx = static_cast<int>(i);
                break;
            }
        }
        if (idx < 0) throw InternalError("quotient boot: no PRS element of matching degree");
        Rational scale = Rational(hj.leading()) / prs.elems[idx].leading();
        // exact proportionality check
        for (std::size_t ci = 0; ci <= static_cast<std::size_t>(dj); ++ci) {
            if (!(Rational(hj.coeff(ci)) == scale * prs.elems[idx].coeff(ci)))
                throw InternalError("quotient boot: proportionality violated");
        }
        boot.elements[j] =
            QuotientBoot::ElementRef{idx, scale, dj, sign_of(hj.leading())};
        boot.last = hj;
        boot.last_index = j;
    }
    return boot;
}

SignSequence eval_stha_at(const QuotientBoot& boot, const ExtendedPoint& x) {
    SignSequence out;
    const int p = boot.top();
    out.signs.reserve(static_cast<std::size_t>(p) + 1);
    if (!x.is_finite()) {
        const bool positive = x.kind() == ExtendedPoint::Kind::pos_infinity;
        for (int j = p; j >= 0; --j) {
            const auto& el = boot.elements[j];
            out.signs.push_back(el ? rat_poly_sign_at_infinity(el->degree, el->leading_sign, positive)
                                   : 0);
        }
        return out;
    }
    // back-substitution from the last quotient-boot element (Rem. 7 order)
    const Rational& xv = x.value();
    const int n = boot.sprs_size;
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1, Rational(0));
    const auto& last_ref = *boot.elements[boot.last_index];
    v[n - 1] = boot.last.eval<Rational>(xv) / last_ref.scale;
    for (int i = n - 1; i >= 1; --i)
        v[i - 1] = boot.quotients[i - 1].eval<Rational>(xv) * v[i] - v[i + 1];
    for (int j = p; j >= 0; --j) {
        const auto& el = boot.elements[j];
        if (!el) {
            out.signs.push_back(0);
        } else {
            out.signs.push_back(el->scale.sign() * v[el->sprs_index].sign());
        }
    }
    return out;
}

unsigned modified_sign_variations(const SignSequence& seq) {
    std::vector<int> s = seq.signs;
    while (!s.empty() && s.back() == 0) s.pop_back();
    if (s.empty() || s.front() == 0)
        throw PreconditionError("modified_sign_variations: first entry must be nonzero");
    unsigned count = 0;
    std::size_t i = 0;
    while (i + 1 < s.size()) {
        if (s[i + 1] != 0) {
            if (s[i] * s[i + 1] < 0) ++count;
            ++i;
            continue;
        }
        std::size_t z = 0;
        std::size_t j = i + 1;
        while (j < s.size() && s[j] == 0) {
            ++z;
            ++j;
        }
        if (z > 2)
            throw StructureError("modified_sign_variations: three or more consecutive zeros");
        count += static_cast<unsigned>(z);  // a,0,b -> 1; a,0,0,b -> 2
        i = j;
    }
    return count;
}

namespace detail {

long cauchy_index(const IntPolynomial& A, const IntPolynomial& B,
                  const ExtendedPoint& a, const ExtendedPoint& b) {
    if (B.is_zero()) return 0;
    IntPolynomial rhs = B;
    if (rhs.degree() >= A.degree()) {
        // Ind(B/A) = Ind(rem(B,A)/A); a positive integer multiple keeps signs
        auto [q, r] = divmod(to_rational(B), to_rational(A));
        (void)q;
        if (r.is_zero()) return 0;
        rhs = clear_denominators(r).first;
    }
    if (rhs.degree() == 0) {
        // constant: index = sign(c) * #roots of A in (a, b)
        if (A.degree() == 0) return 0;
        QuotientBoot sturm = stha_quotient_boot(A, A.derivative());
        long roots = static_cast<long>(count_real_roots(sturm, a, b));
        return sign_of(rhs.leading()) * roots;
    }
    QuotientBoot boot = stha_quotient_boot(A, rhs);
    long wa = static_cast<long>(modified_sign_variations(eval_stha_at(boot, a)));
    long wb = static_cast<long>(modified_sign_variations(eval_stha_at(boot, b)));
    return wa - wb;
}

}  // namespace detail

long tarski_query(const IntPolynomial& A, const IntPolynomial& B,
                  const ExtendedPoint& a, const ExtendedPoint& b) {
    if (A.is_zero()) throw PreconditionError("tarski_query: A is zero");
    if (!is_square_free(A)) throw PreconditionError("tarski_query: A not square-free");
    if (gcd(A, B).degree() != 0)
        throw PreconditionError("tarski_query: A and B not relatively prime");
    if (!(a < b)) throw PreconditionError("tarski_query: needs a < b");
    if (a.is_finite() && sign_at_rational(A, a.value()) == 0)
        throw EndpointRootError("tarski_query: left endpoint is a root of A");
    if (b.is_finite() && sign_at_rational(A, b.value()) == 0)
        throw EndpointRootError("tarski_query: right endpoint is a root of A");
    if (A.degree() == 0) return 0;
    return detail::cauchy_index(A, B, a, b);
}

unsigned count_real_roots(const QuotientBoot& sturm_boot, const ExtendedPoint& a,
                          const ExtendedPoint& b) {
    long wa = static_cast<long>(modified_sign_variations(eval_stha_at(sturm_boot, a)));
    long wb = static_cast<long>(modified_sign_variations(eval_stha_at(sturm_boot, b)));
    long n = wa - wb;
    if (n < 0) throw InternalError("count_real_roots: negative count");
    return static_cast<unsigned>(n);
}

unsigned count_real_roots(const IntPolynomial& A, const ExtendedPoint& a,
                          const ExtendedPoint& b) {
    if (A.is_zero()) throw PreconditionError("count_real_roots: A is zero");
    if (!is_square_free(A)) throw PreconditionError("count_real_roots: A not square-free");
    if (!(a < b)) throw PreconditionError("count_real_roots: needs a < b");
    if (a.is_finite() && sign_at_rational(A, a.value()) == 0)
        throw EndpointRootError("count_real_roots: left endpoint is a root");
    if (b.is_finite() && sign_at_rational(A, b.value()) == 0)
        throw EndpointRootError("count_real_roots: right endpoint is a root");
    if (A.degree() == 0) return 0;
    QuotientBoot sturm = stha_quotient_boot(A, A.derivative());
    return count_real_roots(sturm, a, b);
}

namespace {

int parity_sign(long n) { return n % 2 == 0 ? 1 : -1; }

BigInt sylvester_resultant(const IntPolynomial& A, const IntPolynomial& B) {
    const int p = A.degree(), q = B.degree();
    const int n = p + q;
    // rows: q shifts of A (descending), then p shifts of B (descending)
    std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(n),
                                       std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(0)));
    for (int r = 0; r < q; ++r)
        for (int i = 0; i <= p; ++i) m[r][r + i] = A.coeff(static_cast<std::size_t>(p - i));
    for (int r = 0; r < p; ++r)
        for (int i = 0; i <= q; ++i) m[q + r][r + i] = B.coeff(static_cast<std::size_t>(q - i));
    // Bareiss fraction-free elimination
    int sign = 1;
    BigInt prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (sign_of(m[k][k]) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (sign_of(m[i][k]) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return BigInt(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

BigInt resultant(const IntPolynomial& A, const IntPolynomial& B) {
    if (A.is_zero() || B.is_zero()) throw DomainError("resultant of zero polynomial");
    const int p = A.degree(), q = B.degree();
    if (p == 0 && q == 0) return BigInt(1);
    if (q == 0) return pow_of(B.leading(), static_cast<unsigned long>(p));
    if (p == 0) return pow_of(A.leading(), static_cast<unsigned long>(q));
    if (p == q) return sylvester_resultant(A, B);
    if (p < q) return parity_sign(static_cast<long>(p) * q) * resultant(B, A);
    auto chain = signed_subresultant_chain<BigInt>(A, B);
    BigInt h0 = chain.elems[0].is_zero() ? BigInt(0) : chain.elems[0].leading();
    // H_0 = (-1)^(p(p-1)/2) * Res(A, B)
    return parity_sign(static_cast<long>(p) * (p - 1) / 2) * h0;
}

IntPolynomial gcd(const IntPolynomial& A, const IntPolynomial& B) {
    if (A.is_zero() && B.is_zero()) throw DomainError("gcd of two zero polynomials");
    if (A.is_zero()) return primitive_part(B);
    if (B.is_zero()) return primitive_part(A);
    if (A.degree() == 0 || B.degree() == 0) return IntPolynomial::constant(BigInt(1));
    if (A.degree() < B.degree()) return gcd(B, A);
    if (A.degree() == B.degree()) {
        auto [q, r] = divmod(to_rational(A), to_rational(B));
        (void)q;
        if (r.is_zero()) return primitive_part(B);
        return gcd(B, clear_denominators(-r).first);
    }
    auto chain = signed_subresultant_chain<BigInt>(A, B);
    for (int k = 0; k <= chain.top(); ++k) {
        if (sign_of(chain.principal[k]) != 0) return primitive_part(chain.elems[k]);
    }
    throw InternalError("gcd: no nonzero principal coefficient");
}

bool is_square_free(const IntPolynomial& A) {
    if (A.is_zero()) return false;
    if (A.degree() <= 1) return true;
    return gcd(A, A.derivative()).degree() == 0;
}

IntPolynomial square_free_part(const IntPolynomial& A) {
    if (A.degree() < 1) throw DomainError("square_free_part needs degree >= 1");
    if (A.degree() == 1) return primitive_part(A);
    IntPolynomial g = gcd(A, A.derivative());
    if (g.degree() == 0) return primitive_part(A);
    return exact_div_poly(primitive_part(A), g);
}

SquareFreeDecomposition square_free_factorization(const IntPolynomial& f) {
    if (f.degree() < 1) throw DomainError("square_free_factorization needs degree >= 1");
    SquareFreeDecomposition out;
    IntPolynomial fp = primitive_part(f);
    IntPolynomial u = gcd(fp, fp.derivative());
    if (u.degree() == 0) {
        out.factors.push_back({fp, 1});
        return out;
    }
    IntPolynomial v = exact_div_poly(fp, u);
    IntPolynomial w = exact_div_poly(fp.derivative(), u);
    unsigned i = 1;
    int guard = f.degree() + 1;
    while (v.degree() > 0) {
        if (--guard < 0) throw InternalError("square_free_factorization: no convergence");
        IntPolynomial s = w - v.derivative();
        IntPolynomial g = gcd(v, s);
        if (g.degree() >= 1) out.factors.push_back({g, i});
        v = exact_div_poly(v, g);
        w = s.is_zero() ? IntPolynomial() : exact_div_poly(s, g);
        ++i;
    }
    return out;
}

}  // namespace realroots
