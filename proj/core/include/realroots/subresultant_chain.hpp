/*
  subresultant_chain.hpp

  Signed subresultant (Sturm-Habicht) chain over a generic exact coefficient
  ring, computed by the exact-division recurrence. The chain equals the
  determinant definition (minors of the Sylvester-Habicht matrices) exactly,
  including defective steps, where a degree gap of d between consecutive
  elements introduces the proportionality constant
  (-1)^(d(d+1)/2) * t^(d+1) / s^d between the defective element and its
  regular twin. Every division performed is exact in the coefficient ring and
  is checked.

  Instantiated with C = BigInt for univariate input and C = IntPolynomial for
  bivariate input viewed over a coefficient ring.
*/
#pragma once

#include <vector>

#include "realroots/polynomial.hpp"

namespace realroots {

template <typename C>
struct SubresultantChain {
    std::vector<Poly<C>> elems;  // elems[j] = H_j, j = 0..p; identically-zero kept
    std::vector<C> principal;    // principal[j] = coeff_j(H_j); principal[p] = 1
    int top() const { return static_cast<int>(elems.size()) - 1; }
};

namespace detail {

template <typename C>
C ring_pow(const C& base, int e) {
    C r = RingOps<C>::one();
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

template <typename C>
Poly<C> scaled_exact_div(const Poly<C>& p, const C& mult, const C& div) {
    std::vector<C> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) out.push_back(RingOps<C>::exact_div(c * mult, div));
    return Poly<C>(std::move(out));
}

}  // namespace detail

// Requires deg A > deg B >= 0 (so B nonzero). Callers special-case B = 0.
template <typename C>
SubresultantChain<C> signed_subresultant_chain(const Poly<C>& A, const Poly<C>& B) {
    const int p = A.degree();
    const int q = B.degree();
    if (q < 0) throw PreconditionError("subresultant chain: zero second argument");
    if (p <= q) throw PreconditionError("subresultant chain: needs deg A > deg B");

    SubresultantChain<C> out;
    out.elems.assign(static_cast<std::size_t>(p) + 1, Poly<C>());
    out.principal.assign(static_cast<std::size_t>(p) + 1, RingOps<C>::zero());
    std::vector<C> t(static_cast<std::size_t>(p) + 1, RingOps<C>::zero());

    out.elems[p] = A;
    out.principal[p] = RingOps<C>::one();
    t[p] = RingOps<C>::one();
    out.elems[p - 1] = B;
    t[p - 1] = B.leading();
    if (q == p - 1) out.principal[p - 1] = t[p - 1];

    int i = p + 1;
    int j = p;
    while (j > 0 && !out.elems[j - 1].is_zero()) {
        const int k = out.elems[j - 1].degree();
        C c;
        if (k == j - 1) {
            out.principal[j - 1] = t[j - 1];
            c = t[j - 1];
        } else {
            // defective step: compute the regular twin at level k
            const int d = j - 1 - k;
            C num = detail::ring_pow(t[j - 1], d + 1);
            if (((d * (d + 1) / 2) % 2) != 0) num = RingOps<C>::neg(num);
            const C sk = RingOps<C>::exact_div(num, detail::ring_pow(out.principal[j], d));
            out.principal[k] = sk;
            out.elems[k] = detail::scaled_exact_div(out.elems[j - 1], sk, t[j - 1]);
            t[k] = sk;
            c = sk;
        }
        if (k == 0) break;
        const int e = out.elems[i - 1].degree() - k + 1;
        const Poly<C> r = pseudo_rem(out.elems[i - 1], out.elems[j - 1]);
        const C mult = RingOps<C>::neg(t[j - 1] * c);
        const C div = out.principal[j] * t[i - 1] * detail::ring_pow(t[j - 1], e);
        out.elems[k - 1] = detail::scaled_exact_div(r, mult, div);
        if (!out.elems[k - 1].is_zero()) t[k - 1] = out.elems[k - 1].leading();
        i = j;
        j = k;
    }
    return out;
}

}  // namespace realroots
