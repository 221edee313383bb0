#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qfock/acceptance.hpp"
#include "qfock/errors.hpp"
#include "qfock/q_numbers.hpp"
#include "qfock/qboson.hpp"

using namespace qfock;

namespace {

BosonElement nf(std::vector<Generator> word, BosonForm form) {
    return std::get<BosonElement>(normal_order(word, form));
}

PBWMonomial mono(BosonForm form, std::int64_t r1, std::int64_t r2, std::int64_t s1,
                 std::int64_t s2, std::int64_t t1 = 0, std::int64_t t2 = 0) {
    return PBWMonomial{form, r1, r2, s1, s2, t1, t2};
}

// Random element of the requested form built from form-native generators,
// so the word is integral by construction.
BosonElement random_element(std::mt19937_64& rng, BosonForm form) {
    std::uniform_int_distribution<int> len_dist(1, 3);
    std::uniform_int_distribution<int> pick(0, 5);
    std::uniform_int_distribution<std::int64_t> pow_dist(1, 2);
    std::vector<Generator> word;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
        const std::int64_t n = pow_dist(rng);
        switch (pick(rng)) {
            case 0: word.push_back(Generator::a(1, n)); break;
            case 1:
                word.push_back(form == BosonForm::Res1 ? Generator::a(2, n)
                                                       : Generator::a_divided(2, n));
                break;
            case 2: word.push_back(Generator::a_plus_divided(1, n)); break;
            case 3:
                word.push_back(form == BosonForm::Res1 ? Generator::a_plus_divided(2, n)
                                                       : Generator::a_plus(2, n));
                break;
            case 4: word.push_back(Generator::k(1)); break;
            default: word.push_back(Generator::k_inv(2)); break;
        }
    }
    return nf(word, form);
}

} // namespace

TEST_CASE("generator validation") {
    CHECK_THROWS_AS((void)Generator::a(3, 1), UsageError);
    CHECK_THROWS_AS((void)Generator::a_plus_divided(1, 0), UsageError);
    CHECK_NOTHROW((void)Generator::k(2));
}

TEST_CASE("defining relation in normal form") {
    // a1 a1+ = q^2 a1+ a1 + 1
    const BosonElement e = nf({Generator::a(1), Generator::a_plus(1)}, BosonForm::Res1);
    BosonElement expected(BosonForm::Res1);
    expected.add(mono(BosonForm::Res1, 0, 0, 0, 0), LaurentPoly::one());
    expected.add(mono(BosonForm::Res1, 1, 0, 1, 0), LaurentPoly::monomial(2));
    CHECK(e == expected);
    CHECK(e.str() == "1 + q^2 · a1+^(1) a1^1");
}

TEST_CASE("K conjugation of a divided creator") {
    const BosonElement e =
        nf({Generator::k(1), Generator::a_plus_divided(1, 3), Generator::k_inv(1)},
           BosonForm::Res1);
    BosonElement expected(BosonForm::Res1);
    expected.add(mono(BosonForm::Res1, 3, 0, 0, 0), LaurentPoly::monomial(3));
    CHECK(e == expected);
}

TEST_CASE("second-kind reordering example") {
    // a^(1) a+^2 = q^4 a+^2 a + (q^2 + 1) a+ , written on the res2 basis
    // (site-1 creators are divided there: a+^2 = [2]! a+^(2)).
    const BosonElement e =
        nf({Generator::a_divided(1, 1), Generator::a_plus(1, 2)}, BosonForm::Res2);
    BosonElement expected(BosonForm::Res2);
    expected.add(mono(BosonForm::Res2, 1, 0, 0, 0),
                 LaurentPoly::monomial(2) + LaurentPoly::one());
    expected.add(mono(BosonForm::Res2, 2, 0, 1, 0),
                 LaurentPoly::monomial(4) * q_factorial(2));
    CHECK(e == expected);
}

TEST_CASE("words outside the integral form are reported") {
    const BosonResult r =
        normal_order(std::vector<Generator>{Generator::a_divided(1, 2),
                                            Generator::a_plus_divided(1, 2)},
                     BosonForm::Res1);
    REQUIRE(std::holds_alternative<NotIntegral>(r));
    const auto& err = std::get<NotIntegral>(r);
    CHECK(!err.remainder.empty());
    CHECK(err.message().find("not a Laurent polynomial") != std::string::npos);
    CHECK_THROWS_AS((void)normal_order_integral(
                        std::vector<Generator>{Generator::a_divided(1, 2),
                                               Generator::a_plus_divided(1, 2)},
                        BosonForm::Res1),
                    std::logic_error);
}

TEST_CASE("multiply: unit, noncommutativity, associativity") {
    const BosonElement one = BosonElement::unit(BosonForm::Res1);
    const BosonElement ap = BosonElement::monomial(mono(BosonForm::Res1, 1, 0, 0, 0));
    const BosonElement a = BosonElement::monomial(mono(BosonForm::Res1, 0, 0, 1, 0));
    CHECK(multiply(one, ap) == ap);
    CHECK(multiply(ap, one) == ap);
    // a a+ - q^2 a+ a = 1
    BosonElement comm = multiply(a, ap);
    BosonElement scaled = multiply(ap, a);
    scaled *= LaurentPoly::monomial(2);
    BosonElement diff = comm + (LaurentPoly::integer(-1) * scaled);
    CHECK(diff == one);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 50; ++i) {
        const BosonForm form = i % 2 == 0 ? BosonForm::Res1 : BosonForm::Res2;
        const BosonElement x = random_element(rng, form);
        const BosonElement y = random_element(rng, form);
        const BosonElement z = random_element(rng, form);
        CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    }

    CHECK_THROWS_AS((void)multiply(one, BosonElement::unit(BosonForm::Res2)),
                    std::invalid_argument);
}

TEST_CASE("divided creator merge rule is associative") {
    for (std::int64_t l = 1; l <= 6; ++l) {
        for (std::int64_t m = 1; m <= 6; ++m) {
            for (std::int64_t n = 1; n <= 6; ++n) {
                const BosonElement A = BosonElement::monomial(mono(BosonForm::Res1, l, 0, 0, 0));
                const BosonElement B = BosonElement::monomial(mono(BosonForm::Res1, m, 0, 0, 0));
                const BosonElement C = BosonElement::monomial(mono(BosonForm::Res1, n, 0, 0, 0));
                const BosonElement left = multiply(multiply(A, B), C);
                CHECK(left == multiply(A, multiply(B, C)));
                // the merged coefficient is the expected binomial product
                BosonElement direct = BosonElement::monomial(
                    mono(BosonForm::Res1, l + m + n, 0, 0, 0),
                    q_binomial(l + m, l) * q_binomial(l + m + n, l + m));
                CHECK(left == direct);
            }
        }
    }
}

TEST_CASE("basis conversion") {
    SUBCASE("ordinary creator becomes a factorial multiple of the divided one") {
        const BosonElement x = nf({Generator::a_plus(2, 2)}, BosonForm::Res2);
        const BosonResult r = convert_basis(x, BosonForm::Res1);
        REQUIRE(std::holds_alternative<BosonElement>(r));
        BosonElement expected(BosonForm::Res1);
        expected.add(mono(BosonForm::Res1, 0, 2, 0, 0), q_factorial(2));
        CHECK(std::get<BosonElement>(r) == expected);
    }
    SUBCASE("divided creator does not lie in the other form") {
        const BosonElement x = nf({Generator::a_plus_divided(2, 2)}, BosonForm::Res1);
        const BosonResult r = convert_basis(x, BosonForm::Res2);
        REQUIRE(std::holds_alternative<NotIntegral>(r));
        CHECK(std::get<NotIntegral>(r).monomial.r2 == 2);
    }
    SUBCASE("round trip is the identity where defined") {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 20; ++i) {
            const BosonElement x = random_element(rng, BosonForm::Res1);
            const BosonResult once = convert_basis(x, BosonForm::Res2);
            if (!std::holds_alternative<BosonElement>(once)) continue;
            const BosonResult back = convert_basis(std::get<BosonElement>(once), BosonForm::Res1);
            REQUIRE(std::holds_alternative<BosonElement>(back));
            CHECK(std::get<BosonElement>(back) == x);
        }
        const BosonElement simple = nf({Generator::a_plus_divided(1, 1)}, BosonForm::Res1);
        const BosonResult conv = convert_basis(simple, BosonForm::Res2);
        REQUIRE(std::holds_alternative<BosonElement>(conv));
        CHECK(std::get<BosonElement>(
                  convert_basis(std::get<BosonElement>(conv), BosonForm::Res1)) == simple);
    }
}

TEST_CASE("vacuum application") {
    const BosonElement unit = BosonElement::unit(BosonForm::Res1);
    const VacuumImage img = apply_to_vacuum(unit, 2, 3);
    REQUIRE(img.size() == 1);
    CHECK(img.begin()->first == std::pair<std::int64_t, std::int64_t>{2, 3});
    // annihilators kill the vacuum
    const BosonElement a = BosonElement::monomial(mono(BosonForm::Res1, 0, 0, 1, 0));
    CHECK(apply_to_vacuum(a, 0, 0).empty());
    // K factors act trivially
    const BosonElement k = BosonElement::monomial(mono(BosonForm::Res1, 0, 0, 0, 0, 5, -2));
    CHECK(apply_to_vacuum(k, 1, 1).size() == 1);
}

TEST_CASE("rewrite strategies agree on random words") {
    const ConfluenceResult r = check_confluence(7, 40);
    CHECK(r.passed);
    CHECK(r.words == 40);
}

TEST_CASE("monomial rendering") {
    CHECK(mono(BosonForm::Res1, 0, 0, 0, 0).str() == "1");
    CHECK(mono(BosonForm::Res1, 1, 0, 1, 0).str() == "a1+^(1) a1^1");
    CHECK(mono(BosonForm::Res2, 2, 3, 0, 1, 0, -2).str() == "a1+^(2) a2+^3 a2^(1) K2^-2");
}
