#include <doctest.h>

#include "realroots/sturm_habicht.hpp"
#include "support/chain_oracle.hpp"
#include "support/generators.hpp"

using namespace realroots;
using testsupport::Rng;

namespace {

const IntPolynomial x2_minus_2({-2, 0, 1});
const IntPolynomial two_x({0, 2});

SignSequence seq_of(std::vector<int> v) { return SignSequence{std::move(v)}; }

void check_against_oracle(const IntPolynomial& A, const IntPolynomial& B) {
    auto got = stha_sequence(A, B);
    auto want = testsupport::stha_by_determinants(A, B);
    REQUIRE(got.polys.size() == want.size());
    for (std::size_t j = 0; j < want.size(); ++j) {
        CAPTURE(j);
        CHECK(got.polys[j] == want[j]);
        if (static_cast<int>(j) < A.degree()) CHECK(got.principal[j] == want[j].coeff(j));
    }
    CHECK(got.principal[A.degree()] == 1);  // h_p = 1 by convention
}

}  // namespace

TEST_CASE("stha_sequence matches the worked cases") {
    auto s = stha_sequence(x2_minus_2, two_x);
    REQUIRE(s.top() == 2);
    CHECK(s.polys[2] == x2_minus_2);
    CHECK(s.polys[1] == two_x);
    CHECK(s.polys[0] == IntPolynomial({8}));

    // H_0(X^2+1, 2X) by the minor definition; the classical resultant is 4
    // and the proportionality sign at j = 0, p = 2 is -1
    auto s2 = stha_sequence(IntPolynomial({1, 0, 1}), two_x);
    CHECK(s2.polys[0] == IntPolynomial({-4}));
    CHECK(s2.polys[0] == testsupport::stha_by_determinants(IntPolynomial({1, 0, 1}), two_x)[0]);
    CHECK(resultant(IntPolynomial({1, 0, 1}), two_x) == 4);

    auto s3 = stha_sequence(IntPolynomial({-1, 1}), IntPolynomial({1}));
    REQUIRE(s3.top() == 1);
    CHECK(s3.polys[1] == IntPolynomial({-1, 1}));
    CHECK(s3.polys[0] == IntPolynomial({1}));
}

TEST_CASE("stha_sequence preconditions") {
    CHECK_THROWS_AS(stha_sequence(two_x, x2_minus_2), PreconditionError);
    CHECK_THROWS_AS(stha_sequence(x2_minus_2, x2_minus_2), PreconditionError);
    auto s = stha_sequence(x2_minus_2, IntPolynomial());  // B = 0: trivial tail
    CHECK(s.polys[2] == x2_minus_2);
    CHECK(s.polys[1].is_zero());
    CHECK(s.polys[0].is_zero());
}

TEST_CASE("stha_sequence equals the determinant oracle on random pairs") {
    Rng rng(201);
    std::uniform_int_distribution<int> dp(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        int p = dp(rng);
        std::uniform_int_distribution<int> dq(0, p - 1);
        IntPolynomial A = testsupport::random_poly(rng, p, 8);
        IntPolynomial B = testsupport::random_poly(rng, dq(rng), 8);
        check_against_oracle(A, B);
    }
}

TEST_CASE("stha_sequence equals the oracle on defective families") {
    Rng rng(202);
    SUBCASE("derivative pairs with repeated factors") {
        for (int trial = 0; trial < 20; ++trial) {
            IntPolynomial f1 = testsupport::random_poly(rng, 2, 4);
            IntPolynomial f2 = testsupport::random_poly(rng, 1, 4);
            IntPolynomial A = f1 * f1 * f2;
            IntPolynomial B = A.derivative();
            if (A.degree() <= B.degree()) continue;
            check_against_oracle(A, B);
        }
    }
    SUBCASE("forced mid-chain degree drops") {
        for (int trial = 0; trial < 30; ++trial) {
            IntPolynomial B = testsupport::random_poly(rng, 4, 5);
            IntPolynomial Q = testsupport::random_poly(rng, 2, 5);
            IntPolynomial R = testsupport::random_poly(rng, 0, 5);
            IntPolynomial A = Q * B - R;
            if (A.degree() <= B.degree()) continue;
            check_against_oracle(A, B);
        }
    }
    SUBCASE("constant B") {
        check_against_oracle(IntPolynomial({-1, 0, 0, 1}), IntPolynomial({2}));
        check_against_oracle(IntPolynomial({ -1, 0, 0, 0, 0, 1}), IntPolynomial({-6}));
    }
}

TEST_CASE("quotient boot reproduces the worked example") {
    QuotientBoot boot = stha_quotient_boot(x2_minus_2, two_x);
    REQUIRE(boot.quotients.size() == 2);
    CHECK(boot.quotients[0] == RatPolynomial({Rational(0), Rational(1, 2)}));  // X/2
    CHECK(boot.quotients[1] == RatPolynomial({Rational(0), Rational(1)}));     // X
    CHECK(boot.last == IntPolynomial({8}));
    REQUIRE(boot.elements[0].has_value());
    CHECK(boot.elements[0]->scale == Rational(4));  // H_0 = 8 vs R_2 = 2
    CHECK(boot.elements[0]->scale.sign() > 0);
}

TEST_CASE("quotient boot of gcd pairs and zero B") {
    QuotientBoot b1 = stha_quotient_boot(IntPolynomial({0, 0, 0, 1}), IntPolynomial({0, 0, 3}));
    auto signs = eval_stha_at(b1, Rational(2));
    auto s_full = stha_sequence(IntPolynomial({0, 0, 0, 1}), IntPolynomial({0, 0, 3}));
    for (int j = s_full.top(); j >= 0; --j) {
        int want = s_full.polys[j].is_zero()
                       ? 0
                       : eval_at_rational(s_full.polys[j], Rational(2)).sign();
        CHECK(signs.signs[static_cast<std::size_t>(s_full.top() - j)] == want);
    }

    QuotientBoot b0 = stha_quotient_boot(x2_minus_2, IntPolynomial());
    auto s0 = eval_stha_at(b0, Rational(0));
    CHECK(s0.signs.front() == -1);
}

TEST_CASE("boot evaluation matches the full sequence on random inputs") {
    Rng rng(203);
    std::uniform_int_distribution<int> dp(1, 7);
    for (int trial = 0; trial < 40; ++trial) {
        int p = dp(rng);
        std::uniform_int_distribution<int> dq(0, p - 1);
        IntPolynomial A = testsupport::random_poly(rng, p, 9);
        IntPolynomial B = testsupport::random_poly(rng, dq(rng), 9);
        if (trial % 3 == 0) {
            IntPolynomial g = testsupport::random_poly(rng, 2, 4);
            A = A * g;
            B = B * g;  // force a nontrivial gcd
            if (A.degree() <= B.degree()) continue;
        }
        auto full = stha_sequence(A, B);
        auto boot = stha_quotient_boot(A, B);
        for (int k = 0; k < 12; ++k) {
            Rational x = testsupport::random_rational(rng, 50, 9);
            auto signs = eval_stha_at(boot, x);
            for (int j = full.top(); j >= 0; --j) {
                int want = full.polys[j].is_zero()
                               ? 0
                               : eval_at_rational(full.polys[j], x).sign();
                CAPTURE(trial); CAPTURE(j);
                CHECK(signs.signs[static_cast<std::size_t>(full.top() - j)] == want);
            }
        }
    }
}

TEST_CASE("eval_stha_at the worked points") {
    QuotientBoot boot = stha_quotient_boot(x2_minus_2, two_x);
    CHECK(eval_stha_at(boot, Rational(-3)).signs == std::vector<int>{1, -1, 1});
    CHECK(eval_stha_at(boot, Rational(0)).signs == std::vector<int>{-1, 0, 1});
    CHECK(eval_stha_at(boot, ExtendedPoint::pos_infinity()).signs == std::vector<int>{1, 1, 1});
    CHECK(eval_stha_at(boot, ExtendedPoint::neg_infinity()).signs == std::vector<int>{1, -1, 1});
}

TEST_CASE("modified sign variations") {
    CHECK(modified_sign_variations(seq_of({1, -1, 1})) == 2);
    CHECK(modified_sign_variations(seq_of({1, 0, -1})) == 1);
    CHECK(modified_sign_variations(seq_of({1, 1, 1})) == 0);
    CHECK(modified_sign_variations(seq_of({1, 0, 1})) == 1);
    CHECK(modified_sign_variations(seq_of({1, 0, 0, -1})) == 2);
    CHECK(modified_sign_variations(seq_of({1, 0, 0, 1})) == 2);
    CHECK(modified_sign_variations(seq_of({1, -1, 0, 0})) == 1);  // trailing zeros ignored
    CHECK_THROWS_AS(modified_sign_variations(seq_of({1, 0, 0, 0, 1})), StructureError);
    CHECK_THROWS_AS(modified_sign_variations(seq_of({0, 1, 1})), PreconditionError);
}

TEST_CASE("tarski_query worked cases and errors") {
    CHECK(tarski_query(x2_minus_2, IntPolynomial({0, 1}), Rational(-3), Rational(3)) == 2);
    CHECK(tarski_query(x2_minus_2, IntPolynomial({1}), Rational(-3), Rational(3)) == 0);
    CHECK(tarski_query(IntPolynomial({1, 0, 1}), IntPolynomial({0, 1}), Rational(-10),
                       Rational(10)) == 0);
    // A' pairs with A: count is the Sturm case
    CHECK(tarski_query(x2_minus_2, x2_minus_2.derivative(), Rational(-3), Rational(3)) == 2);

    IntPolynomial square = x2_minus_2 * x2_minus_2;
    CHECK_THROWS_AS(tarski_query(square, IntPolynomial({0, 1}), Rational(-3), Rational(3)),
                    PreconditionError);
    CHECK_THROWS_AS(tarski_query(x2_minus_2, x2_minus_2 * two_x, Rational(-3), Rational(3)),
                    PreconditionError);
    CHECK_THROWS_AS(tarski_query(x2_minus_2, two_x, Rational(3), Rational(-3)),
                    PreconditionError);
    CHECK_THROWS_AS(
        tarski_query(IntPolynomial({0, 1}), IntPolynomial({1, 1}), Rational(0), Rational(1)),
        EndpointRootError);
}

TEST_CASE("count_real_roots worked cases") {
    CHECK(count_real_roots(x2_minus_2, Rational(-3), Rational(3)) == 2);
    CHECK(count_real_roots(x2_minus_2, Rational(0), Rational(3)) == 1);
    CHECK(count_real_roots(x2_minus_2, Rational(3), Rational(4)) == 0);
    CHECK(count_real_roots(x2_minus_2, ExtendedPoint::neg_infinity(),
                           ExtendedPoint::pos_infinity()) == 2);
}

TEST_CASE("root-count oracle on constructed rational roots") {
    Rng rng(204);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> dn(1, 8);
        auto roots = testsupport::distinct_rationals(rng, dn(rng), 30, 8);
        std::vector<std::pair<Rational, unsigned>> spec;
        for (const auto& r : roots) spec.emplace_back(r, 1);
        IntPolynomial f = testsupport::product_with_roots(spec);
        for (int k = 0; k < 8; ++k) {
            Rational a = testsupport::random_rational(rng, 40, 5);
            Rational b = testsupport::random_rational(rng, 40, 5);
            if (!(a < b)) std::swap(a, b);
            if (a == b) continue;
            bool endpoint_hit = false;
            unsigned expect = 0;
            for (const auto& r : roots) {
                if (r == a || r == b) endpoint_hit = true;
                if (a < r && r < b) ++expect;
            }
            if (endpoint_hit) continue;
            CHECK(count_real_roots(f, a, b) == expect);
        }
    }
}

TEST_CASE("resultant worked cases and oracle agreement") {
    CHECK(resultant(x2_minus_2, two_x) == -8);
    CHECK(resultant(IntPolynomial({-1, 1}), IntPolynomial({-2, 1})) == -1);
    CHECK(resultant(IntPolynomial({4, 0, 1, 3}), IntPolynomial({7})) == 343);
    CHECK_THROWS_AS(resultant(IntPolynomial(), two_x), DomainError);

    Rng rng(205);
    std::uniform_int_distribution<int> dp(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        int p = dp(rng);
        std::uniform_int_distribution<int> dq(0, p);
        IntPolynomial A = testsupport::random_poly(rng, p, 8);
        IntPolynomial B = testsupport::random_poly(rng, dq(rng), 8);
        CHECK(resultant(A, B) == testsupport::sylvester_resultant_oracle(A, B));
    }
}

TEST_CASE("H_0 carries the proportionality sign against the Sylvester oracle") {
    Rng rng(206);
    std::uniform_int_distribution<int> dp(1, 6);
    for (int trial = 0; trial < 40; ++trial) {
        int p = dp(rng);
        std::uniform_int_distribution<int> dq(0, p - 1);
        IntPolynomial A = testsupport::random_poly(rng, p, 8);
        IntPolynomial B = testsupport::random_poly(rng, dq(rng), 8);
        auto s = stha_sequence(A, B);
        BigInt h0 = s.polys[0].is_zero() ? BigInt(0) : s.polys[0].leading();
        BigInt res = testsupport::sylvester_resultant_oracle(A, B);
        int eps = ((static_cast<long>(p) * (p - 1) / 2) % 2 == 0) ? 1 : -1;
        CHECK(h0 == eps * res);
    }
}

TEST_CASE("gcd worked cases") {
    CHECK(gcd(IntPolynomial({-1, 0, 1}), IntPolynomial({1, 2, 1})) == IntPolynomial({1, 1}));
    CHECK(gcd(x2_minus_2, IntPolynomial({-3, 0, 1})) == IntPolynomial({1}));
    IntPolynomial f = testsupport::product_with_roots({{Rational(1), 2}, {Rational(-2), 1}});
    CHECK(gcd(f, f.derivative()) == IntPolynomial({-1, 1}));
    CHECK_THROWS_AS(gcd(IntPolynomial(), IntPolynomial()), DomainError);
    CHECK(gcd(IntPolynomial(), IntPolynomial({0, 2})) == IntPolynomial({0, 1}));
}

TEST_CASE("gcd divides both arguments and leaves coprime quotients") {
    Rng rng(207);
    for (int trial = 0; trial < 40; ++trial) {
        IntPolynomial g = testsupport::random_poly(rng, 2, 5);
        IntPolynomial a = testsupport::random_poly(rng, 3, 5);
        IntPolynomial b = testsupport::random_poly(rng, 2, 5);
        IntPolynomial A = g * a;
        IntPolynomial B = g * b;
        IntPolynomial d = gcd(A, B);
        CHECK(d.degree() >= g.degree() - 1);  // at least the constructed factor (up to content)
        IntPolynomial qa = exact_div_poly(primitive_part(A), d);
        IntPolynomial qb = exact_div_poly(primitive_part(B), d);
        CHECK(gcd(qa, qb).degree() == 0);
    }
}

TEST_CASE("square_free_part worked cases") {
    IntPolynomial f = testsupport::product_with_roots({{Rational(1), 2}, {Rational(-2), 1}});
    CHECK(square_free_part(f) == IntPolynomial({-2, 1, 1}));
    CHECK(square_free_part(x2_minus_2) == x2_minus_2);
    CHECK(square_free_part(IntPolynomial({0, 0, 0, 0, 1})) == IntPolynomial({0, 1}));
    CHECK_THROWS_AS(square_free_part(IntPolynomial({5})), DomainError);
}

TEST_CASE("square_free_part yields no repeated roots") {
    Rng rng(208);
    for (int trial = 0; trial < 30; ++trial) {
        IntPolynomial g = testsupport::random_poly(rng, 2, 4);
        IntPolynomial h = testsupport::random_poly(rng, 2, 4);
        IntPolynomial f = g * g * h;
        IntPolynomial red = square_free_part(f);
        CHECK(gcd(red, red.derivative()).degree() == 0);
    }
}

TEST_CASE("square_free_factorization worked cases") {
    IntPolynomial f = testsupport::product_with_roots({{Rational(1), 2}, {Rational(-2), 1}});
    auto d = square_free_factorization(f);
    REQUIRE(d.factors.size() == 2);
    CHECK(d.factors[0].poly == IntPolynomial({2, 1}));
    CHECK(d.factors[0].multiplicity == 1);
    CHECK(d.factors[1].poly == IntPolynomial({-1, 1}));
    CHECK(d.factors[1].multiplicity == 2);

    auto d2 = square_free_factorization(x2_minus_2);
    REQUIRE(d2.factors.size() == 1);
    CHECK(d2.factors[0].poly == x2_minus_2);
    CHECK(d2.factors[0].multiplicity == 1);

    auto d3 = square_free_factorization(IntPolynomial({0, 0, 0, 1}));
    REQUIRE(d3.factors.size() == 1);
    CHECK(d3.factors[0].poly == IntPolynomial({0, 1}));
    CHECK(d3.factors[0].multiplicity == 3);
}

TEST_CASE("square_free_factorization reconstructs and is pairwise coprime") {
    Rng rng(209);
    for (int trial = 0; trial < 30; ++trial) {
        IntPolynomial g1 = testsupport::random_square_free_poly(rng, 2, 4);
        IntPolynomial g2 = testsupport::random_square_free_poly(rng, 1, 4);
        IntPolynomial f = g1 * g2 * g2 * g2;
        if (gcd(g1, g2).degree() != 0) continue;
        auto d = square_free_factorization(f);
        IntPolynomial prod = IntPolynomial::constant(BigInt(1));
        for (const auto& fac : d.factors) {
            for (unsigned i = 0; i < fac.multiplicity; ++i) prod = prod * fac.poly;
            CHECK(is_square_free(fac.poly));
        }
        for (std::size_t i = 0; i < d.factors.size(); ++i)
            for (std::size_t j = i + 1; j < d.factors.size(); ++j)
                CHECK(gcd(d.factors[i].poly, d.factors[j].poly).degree() == 0);
        CHECK(primitive_part(prod) == primitive_part(f));
    }
}
