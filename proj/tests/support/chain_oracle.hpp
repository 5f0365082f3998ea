/*
  chain_oracle.hpp

  Independent small-degree oracles for the Sturm-Habicht machinery: the
  sequence computed straight from its minor definition (rows A*X^{q-1-j}..A,
  B..B*X^{p-1-j}; H_j = sum_l det(M_j^l) X^l) with Bareiss determinants, and
  the classical Sylvester resultant determinant.
*/
#pragma once

#include <vector>

#include "realroots/polynomial.hpp"

namespace testsupport {

using realroots::BigInt;
using realroots::IntPolynomial;

// H_p..H_0 by determinants; index j = 0..p. Requires deg A > deg B >= 0.
std::vector<IntPolynomial> stha_by_determinants(const IntPolynomial& A, const IntPolynomial& B);

BigInt sylvester_resultant_oracle(const IntPolynomial& A, const IntPolynomial& B);

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

}  // namespace testsupport
