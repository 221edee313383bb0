#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfock/errors.hpp"
#include "qfock/q_numbers.hpp"

using namespace qfock;

TEST_CASE("q-integers") {
    CHECK(q_int(0).is_zero());
    CHECK(q_int(1).is_one());
    CHECK(q_int(3).str() == "q^2 + 1 + q^-2");
    CHECK(q_int(-2) == -(LaurentPoly::monomial(1) + LaurentPoly::monomial(-1)));
    for (std::int64_t n = -8; n <= 8; ++n) CHECK(q_int(-n) == -q_int(n));
    // (q - q^-1) [n]_q = q^n - q^-n
    for (std::int64_t n = 1; n <= 10; ++n) {
        const LaurentPoly lhs = (LaurentPoly::monomial(1) - LaurentPoly::monomial(-1)) * q_int(n);
        CHECK(lhs == LaurentPoly::monomial(n) - LaurentPoly::monomial(-n));
    }
}

TEST_CASE("q-factorials") {
    CHECK(q_factorial(0).is_one());
    CHECK(q_factorial(2) == q_int(2));
    // [3]! = (q + q^-1)(q^2 + 1 + q^-2), expanded by hand
    LaurentPoly expected;
    expected.add_term(3, 1);
    expected.add_term(1, 2);
    expected.add_term(-1, 2);
    expected.add_term(-3, 1);
    CHECK(q_factorial(3) == expected);
    CHECK_THROWS_AS((void)q_factorial(-1), UsageError);
}

TEST_CASE("Gaussian binomials") {
    CHECK(q_binomial(7, 7).is_one());
    CHECK(q_binomial(5, -1).is_zero());
    LaurentPoly expected; // [4 over 2], expanded by hand from [4][3]/([2][1])
    expected.add_term(4, 1);
    expected.add_term(2, 1);
    expected.add_term(0, 2);
    expected.add_term(-2, 1);
    expected.add_term(-4, 1);
    CHECK(q_binomial(4, 2) == expected);
    CHECK(q_binomial(3, 5).is_zero());
    // negative upper index through the same product formula
    CHECK(q_binomial(-1, 3) == LaurentPoly::integer(-1));
    CHECK(q_binomial(-2, 2) == q_int(3));
    for (std::int64_t n = 1; n <= 8; ++n) {
        for (std::int64_t m = 0; m <= 8; ++m) {
            // [-n over m] = (-1)^m q^{...}-free identity against [n+m-1 over m]
            const LaurentPoly lhs = q_binomial(-n, m);
            LaurentPoly rhs = q_binomial(n + m - 1, m);
            if (m % 2 != 0) rhs = -rhs;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("binomials are palindromic (bar symmetry)") {
    for (std::int64_t n = 0; n <= 25; ++n) {
        for (std::int64_t m = 0; m <= n; ++m) {
            const LaurentPoly b = q_binomial(n, m);
            CHECK(b == b.bar());
        }
    }
}

TEST_CASE("binomials never leave the Laurent ring") {
    // exercised through the internal exactness assertion: any remainder throws
    for (std::int64_t n = -30; n <= 30; ++n) {
        for (std::int64_t m = 0; m <= 30; ++m) {
            CHECK_NOTHROW((void)q_binomial(n, m));
        }
    }
}

TEST_CASE("Pascal-type recurrence") {
    for (std::int64_t r = 0; r <= 25; ++r) {
        for (std::int64_t k = 0; k <= r; ++k) {
            const LaurentPoly rhs = LaurentPoly::monomial(-k) * q_binomial(r - 1, k) +
                                    LaurentPoly::monomial(r - k) * q_binomial(r - 1, k - 1);
            CHECK(q_binomial(r, k) == rhs);
        }
    }
}

TEST_CASE("memoized binomial table agrees with the product formula") {
    QBinomialTable table;
    for (std::int64_t n = 0; n <= 20; ++n) {
        for (std::int64_t m = 0; m <= n; ++m) {
            CHECK(table.at(n, m) == q_binomial(n, m));
        }
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(3).str() == "q^2 + q + 1");
    CHECK(cyclotomic_polynomial(5).str() == "q^4 + q^3 + q^2 + q + 1");
    CHECK(cyclotomic_polynomial(9).str() == "q^6 + q^3 + 1");
    CHECK(cyclotomic_polynomial(15).max_exp() == 8); // phi(15) = 8
    CHECK_THROWS_AS((void)cyclotomic_polynomial(4), UsageError);
    CHECK_THROWS_AS((void)cyclotomic_polynomial(1), UsageError);
    CHECK_THROWS_AS((void)cyclotomic_polynomial(-3), UsageError);
}

TEST_CASE("digit decomposition uses floor division") {
    CHECK(digits(13, 5) == Digits{3, 2});
    CHECK(digits(0, 7) == Digits{0, 0});
    CHECK(digits(-1, 5) == Digits{4, -1});
    for (std::int64_t p : {3, 5, 9}) {
        for (std::int64_t n = -40; n <= 40; ++n) {
            const Digits d = digits(n, p);
            CHECK(d.n0 >= 0);
            CHECK(d.n0 < p);
            CHECK(n == d.n0 + p * d.n1);
        }
    }
    CHECK_THROWS_AS((void)digits(3, 2), UsageError);
}

TEST_CASE("binomial at the root equals the upper digit") {
    CHECK(q_binom_at_root(13, 5) == 2);
    CHECK(q_binom_at_root(4, 5) == 0);
    CHECK(q_binom_at_root(-1, 3) == -1);
}
