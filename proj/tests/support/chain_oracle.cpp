#include "support/chain_oracle.hpp"

#include "realroots/errors.hpp"

namespace testsupport {

using realroots::exact_div;
using realroots::sign_of;

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return BigInt(1);
    int sign = 1;
    BigInt prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sign_of(m[k][k]) == 0) {
            std::size_t piv = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (sign_of(m[i][k]) != 0) {
                    piv = i;
                    break;
                }
            if (piv == k) return BigInt(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

namespace {

// coefficient of X^(ncols-1-c) in poly X^shift * P, against the descending basis
BigInt basis_coeff(const IntPolynomial& p, int shift, int ncols, int c) {
    const int exp = ncols - 1 - c - shift;
    if (exp < 0) return BigInt(0);
    return p.coeff(static_cast<std::size_t>(exp));
}

}  // namespace

std::vector<IntPolynomial> stha_by_determinants(const IntPolynomial& A, const IntPolynomial& B) {
    const int p = A.degree();
    const int q = B.degree();
    if (p <= q || q < 0) throw realroots::PreconditionError("oracle: needs deg A > deg B >= 0");
    std::vector<IntPolynomial> H(static_cast<std::size_t>(p) + 1);
    H[p] = A;
    H[p - 1] = B;
    for (int j = std::min(q, p - 2); j >= 0; --j) {
        const int ncols = p + q - j;
        std::vector<std::vector<BigInt>> rows;
        for (int sh = q - 1 - j; sh >= 0; --sh) {
            std::vector<BigInt> row(static_cast<std::size_t>(ncols));
            for (int c = 0; c < ncols; ++c) row[c] = basis_coeff(A, sh, ncols, c);
            rows.push_back(std::move(row));
        }
        for (int sh = 0; sh <= p - 1 - j; ++sh) {
            std::vector<BigInt> row(static_cast<std::size_t>(ncols));
            for (int c = 0; c < ncols; ++c) row[c] = basis_coeff(B, sh, ncols, c);
            rows.push_back(std::move(row));
        }
        const int nsel = p + q - 1 - 2 * j;  // leading columns of every minor
        std::vector<BigInt> hj(static_cast<std::size_t>(j) + 1);
        for (int l = 0; l <= j; ++l) {
            std::vector<std::vector<BigInt>> sq;
            sq.reserve(rows.size());
            for (const auto& row : rows) {
                std::vector<BigInt> r(row.begin(), row.begin() + nsel);
                r.push_back(row[static_cast<std::size_t>(ncols - 1 - l)]);
                sq.push_back(std::move(r));
            }
            hj[static_cast<std::size_t>(l)] = bareiss_determinant(std::move(sq));
        }
        H[j] = IntPolynomial(std::move(hj));
    }
    return H;
}

BigInt sylvester_resultant_oracle(const IntPolynomial& A, const IntPolynomial& B) {
    const int p = A.degree();
    const int q = B.degree();
    if (p < 0 || q < 0) throw realroots::PreconditionError("oracle: zero polynomial");
    if (p == 0 && q == 0) return BigInt(1);
    const int n = p + q;
    std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(n),
                                       std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(0)));
    for (int r = 0; r < q; ++r)
        for (int i = 0; i <= p; ++i) m[r][r + i] = A.coeff(static_cast<std::size_t>(p - i));
    for (int r = 0; r < p; ++r)
        for (int i = 0; i <= q; ++i) m[q + r][r + i] = B.coeff(static_cast<std::size_t>(q - i));
    return bareiss_determinant(std::move(m));
}

}  // namespace testsupport
