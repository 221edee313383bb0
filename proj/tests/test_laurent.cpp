#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qfock/laurent.hpp"

using namespace qfock;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 4);
    std::uniform_int_distribution<int> exp_dist(-5, 5);
    std::uniform_int_distribution<int> coeff_dist(-6, 6);
    LaurentPoly p;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) p.add_term(exp_dist(rng), coeff_dist(rng));
    return p;
}

} // namespace

TEST_CASE("canonical zero and basic structure") {
    LaurentPoly z;
    CHECK(z.is_zero());
    CHECK(z.str() == "0");
    CHECK(LaurentPoly::monomial(3, 0).is_zero());
    LaurentPoly p = LaurentPoly::monomial(2) + LaurentPoly::monomial(-2);
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(0) == 0);
    CHECK(p.min_exp() == -2);
    CHECK(p.max_exp() == 2);
    // no stored zero coefficients after cancellation
    p -= LaurentPoly::monomial(2);
    CHECK(p.terms().size() == 1);
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 50; ++i) {
        const LaurentPoly a = random_poly(rng);
        const LaurentPoly b = random_poly(rng);
        const LaurentPoly c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + LaurentPoly::zero() == a);
        CHECK(a * LaurentPoly::one() == a);
    }
}

TEST_CASE("rendering contract") {
    CHECK(LaurentPoly::monomial(2, 3).str() == "3*q^2");
    CHECK(LaurentPoly::monomial(-2).str() == "q^-2");
    CHECK(LaurentPoly::monomial(1).str() == "q");
    CHECK(LaurentPoly::integer(-1).str() == "-1");
    CHECK((LaurentPoly::monomial(2) + LaurentPoly::one() + LaurentPoly::monomial(-2)).str() ==
          "q^2 + 1 + q^-2");
    CHECK((LaurentPoly::monomial(1) - LaurentPoly::one()).str() == "q + -1");
    CHECK(LaurentPoly::monomial(3, -1).str() == "-q^3");
}

TEST_CASE("bar involution") {
    const LaurentPoly p = LaurentPoly::monomial(2, 5) + LaurentPoly::monomial(-1, -3);
    CHECK(p.bar() == LaurentPoly::monomial(-2, 5) + LaurentPoly::monomial(1, -3));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        const LaurentPoly a = random_poly(rng);
        CHECK(a.bar().bar() == a);
        const LaurentPoly b = random_poly(rng);
        CHECK((a * b).bar() == a.bar() * b.bar());
    }
}

TEST_CASE("division") {
    const LaurentPoly q1 = LaurentPoly::monomial(1) + LaurentPoly::monomial(-1); // [2]_q
    SUBCASE("exact, monic divisor") {
        const LaurentPoly num = q1 * (LaurentPoly::monomial(3) + LaurentPoly::integer(7));
        const auto quot = divide_exact(num, q1);
        REQUIRE(quot.has_value());
        CHECK(*quot == LaurentPoly::monomial(3) + LaurentPoly::integer(7));
    }
    SUBCASE("exact, non-monic divisor") {
        const LaurentPoly two_q = LaurentPoly::monomial(1, 2);
        const auto quot = divide_exact(LaurentPoly::monomial(3, 4), two_q);
        REQUIRE(quot.has_value());
        CHECK(*quot == LaurentPoly::monomial(2, 2));
    }
    SUBCASE("inexact leaves a remainder report") {
        const LaurentDivision d = divide(LaurentPoly::monomial(2) + LaurentPoly::one(), q1);
        CHECK(!d.exact);
        CHECK(!d.remainder_str.empty());
        CHECK(!divide_exact(LaurentPoly::one(), q1).has_value());
    }
    SUBCASE("rational-only quotient is not exact over Z") {
        const LaurentPoly two = LaurentPoly::integer(2);
        CHECK(!divide_exact(LaurentPoly::monomial(1), two).has_value());
        CHECK(divide_exact(LaurentPoly::monomial(1, 2), two).has_value());
    }
    SUBCASE("division by zero throws") {
        CHECK_THROWS_AS((void)divide(q1, LaurentPoly::zero()), std::invalid_argument);
    }
}

TEST_CASE("pow") {
    const LaurentPoly q1 = LaurentPoly::monomial(1) + LaurentPoly::monomial(-1);
    CHECK(q1.pow(0).is_one());
    CHECK(q1.pow(2) == q1 * q1);
    CHECK(q1.pow(3) == q1 * q1 * q1);
}
