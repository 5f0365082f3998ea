#include <doctest.h>

#include "realroots/bounds.hpp"
#include "realroots/polynomial.hpp"
#include "support/generators.hpp"
#include "support/numeric_oracle.hpp"

using namespace realroots;
using testsupport::Rng;

namespace {
const IntPolynomial x2_minus_2({-2, 0, 1});
}

TEST_CASE("bitsize follows the L(P) definition") {
    CHECK(bitsize(IntPolynomial({1, 3})) == 3);       // 3X + 1
    CHECK(bitsize(IntPolynomial({1, 0, 0, 0, 0, 1})) == 2);  // X^5 + 1
    CHECK(bitsize(x2_minus_2) == 3);
    CHECK_THROWS_AS(bitsize(IntPolynomial()), DomainError);
}

TEST_CASE("eval_at_rational by Horner") {
    CHECK(eval_at_rational(x2_minus_2, Rational(3, 2)) == Rational(1, 4));
    CHECK(eval_at_rational(IntPolynomial(), Rational(7, 3)) == Rational(0));
    CHECK(eval_at_rational(IntPolynomial({0, 0, 0, 1}), Rational(-2)) == Rational(-8));
}

TEST_CASE("derivative") {
    CHECK(x2_minus_2.derivative() == IntPolynomial({0, 2}));
    CHECK(IntPolynomial({5}).derivative().is_zero());
    CHECK(IntPolynomial({0, -1, 0, 1}).derivative() == IntPolynomial({-1, 0, 3}));
}

TEST_CASE("content and primitive part") {
    auto [c1, p1] = content_and_primitive(IntPolynomial({-8, 0, 4}));
    CHECK(c1 == 4);
    CHECK(p1 == x2_minus_2);
    auto [c2, p2] = content_and_primitive(IntPolynomial({0, -3}));
    CHECK(c2 == 3);
    CHECK(p2 == IntPolynomial({0, 1}));
    auto [c3, p3] = content_and_primitive(IntPolynomial({1, 1}));
    CHECK(c3 == 1);
    CHECK(p3 == IntPolynomial({1, 1}));
    CHECK_THROWS_AS(content_and_primitive(IntPolynomial()), DomainError);
}

TEST_CASE("cauchy root bound") {
    CHECK(cauchy_root_bound(IntPolynomial({1, -5, 0, 2})) == Rational(7, 2));
    CHECK(cauchy_root_bound(x2_minus_2) == Rational(3));
    CHECK(cauchy_root_bound(IntPolynomial({0, 0, 0, 0, 1})) == Rational(1));
    CHECK_THROWS_AS(cauchy_root_bound(IntPolynomial({3})), DomainError);
}

TEST_CASE("cauchy bound soundness on constructed rational roots") {
    Rng rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<std::size_t> dn(1, 6);
        auto roots = testsupport::distinct_rationals(rng, dn(rng), 40, 8);
        std::vector<std::pair<Rational, unsigned>> spec;
        for (const auto& r : roots) spec.emplace_back(r, 1);
        IntPolynomial f = testsupport::product_with_roots(spec);
        Rational b = cauchy_root_bound(f);
        for (const auto& r : roots) CHECK(r.abs() < b);
    }
}

TEST_CASE("mahler measure upper bound") {
    // X^2 - 2: tau = 3, d = 2: bound >= 8*sqrt(3)
    Rational b = mahler_measure_upper_bound(x2_minus_2);
    CHECK(Rational(8) * sqrt_upper(BigInt(3)) <= b * Rational(1));
    CHECK(b * b >= Rational(192));  // (8 sqrt 3)^2
    // constant 1: tau = 2 by the bitsize definition
    CHECK(mahler_measure_upper_bound(IntPolynomial({1})) >= Rational(4));
    // X - 1: bound >= 4*sqrt(2)
    Rational b2 = mahler_measure_upper_bound(IntPolynomial({-1, 1}));
    CHECK(b2 * b2 >= Rational(32));
}

TEST_CASE("davenport-mahler bound domain") {
    CHECK_THROWS_AS(davenport_mahler_lower_bound(x2_minus_2, 0), DomainError);
    CHECK_THROWS_AS(davenport_mahler_lower_bound(x2_minus_2, 2), DomainError);
    CHECK(davenport_mahler_lower_bound(x2_minus_2, 1).sign() > 0);
}

TEST_CASE("davenport-mahler inequality on the spec instances") {
    // f = X^2 - 2: the single gap 2*sqrt(2) must dominate the returned bound
    Rational b = davenport_mahler_lower_bound(x2_minus_2, 1);
    CHECK(b * b < Rational(8));
    // f = (X-1)(X-2)(X-3): gap product 1
    IntPolynomial f = testsupport::product_with_roots(
        {{Rational(1), 1}, {Rational(2), 1}, {Rational(3), 1}});
    CHECK(davenport_mahler_lower_bound(f, 2) < Rational(1));
}

TEST_CASE("separation lower bound") {
    SUBCASE("domain") {
        CHECK_THROWS_AS(separation_lower_bound(IntPolynomial({1, 2})), DomainError);
    }
    SUBCASE("X^2 - 2: bound below the true separation 2*sqrt(2)") {
        Rational b = separation_lower_bound(x2_minus_2);
        CHECK(b.sign() > 0);
        CHECK(b * b < Rational(8));
        // and below the formula value (1/4) * 3^(-1/2) * 2^(-3)
        CHECK(b <= Rational(1, 32) * sqrt_upper(BigInt(3)));
    }
    SUBCASE("constructed close roots at distance 2^-10") {
        IntPolynomial f = testsupport::product_with_roots(
            {{Rational(1), 1}, {Rational(1025, 1024), 1}});
        CHECK(separation_lower_bound(f) <= Rational(1, 1024));
    }
}

TEST_CASE("ring laws on random triples") {
    Rng rng(102);
    std::uniform_int_distribution<int> dd(0, 16);
    for (int trial = 0; trial < 60; ++trial) {
        IntPolynomial p = testsupport::random_poly(rng, dd(rng), 31);
        IntPolynomial q = testsupport::random_poly(rng, dd(rng), 31);
        IntPolynomial r = testsupport::random_poly(rng, dd(rng), 31);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    Rng rng(103);
    std::uniform_int_distribution<int> dd(0, 9);
    for (int trial = 0; trial < 200; ++trial) {
        IntPolynomial p = testsupport::random_poly(rng, dd(rng), 16);
        IntPolynomial q = testsupport::random_poly(rng, dd(rng), 16);
        Rational x = testsupport::random_rational(rng, 30, 7);
        CHECK(eval_at_rational(p * q, x) == eval_at_rational(p, x) * eval_at_rational(q, x));
        CHECK(eval_at_rational(p + q, x) == eval_at_rational(p, x) + eval_at_rational(q, x));
    }
}

TEST_CASE("mahler monotonicity under square-free reduction") {
    Rng rng(104);
    for (int trial = 0; trial < 25; ++trial) {
        IntPolynomial g = testsupport::random_square_free_poly(rng, 3, 4);
        IntPolynomial h = testsupport::random_square_free_poly(rng, 2, 4);
        IntPolynomial f = g * h * h;  // not square-free
        IntPolynomial fred = square_free_part(f);
        auto mf = testsupport::mahler_measure_numeric(f);
        auto mred = testsupport::mahler_measure_numeric(fred);
        auto ub = testsupport::MpFloat(mahler_measure_upper_bound(f));
        // numeric slack for the root-finder error
        auto slack = testsupport::MpFloat::pow2(-60);
        CHECK(mred <= mf * (testsupport::MpFloat(1) + slack) + slack);
        CHECK(mf <= ub);
    }
}
