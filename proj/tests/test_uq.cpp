#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfock/cyclotomic.hpp"
#include "qfock/errors.hpp"
#include "qfock/uq.hpp"

using namespace qfock;

namespace {

PBWMonomial mono(BosonForm form, std::int64_t r1, std::int64_t r2, std::int64_t s1,
                 std::int64_t s2, std::int64_t t1 = 0, std::int64_t t2 = 0) {
    return PBWMonomial{form, r1, r2, s1, s2, t1, t2};
}

BosonElement single(BosonForm form, const PBWMonomial& m, LaurentPoly c) {
    return BosonElement::monomial(m, std::move(c));
}

} // namespace

TEST_CASE("generator validation") {
    CHECK_THROWS_AS((void)UGenerator::e_divided(0), UsageError);
    CHECK_THROWS_AS((void)UGenerator::kzero(4), UsageError);
    CHECK(UGenerator::e().str() == "e");
    CHECK(UGenerator::f_divided(3).str() == "f^(3)");
    CHECK(UGenerator::kzero(5).str() == "[K;0;5]");
}

TEST_CASE("boson images of the generators") {
    // e = K2^-1 a1+ a2, normal-ordered: q a1+^(1) a2 K2^-1
    CHECK(realize(UGenerator::e(), 1) ==
          single(BosonForm::Res1, mono(BosonForm::Res1, 1, 0, 0, 1, 0, -1),
                 LaurentPoly::monomial(1)));
    // f = K1^-1 a1 a2+, normal-ordered: q a2+^(1) a1 K1^-1
    CHECK(realize(UGenerator::f(), 1) ==
          single(BosonForm::Res1, mono(BosonForm::Res1, 0, 1, 1, 0, -1, 0),
                 LaurentPoly::monomial(1)));
    // e^(2) = q^-1 K2^-2 a1+^(2) a2^2, normal-ordered: q^3 a1+^(2) a2^2 K2^-2
    CHECK(realize(UGenerator::e_divided(2), 1) ==
          single(BosonForm::Res1, mono(BosonForm::Res1, 2, 0, 0, 2, 0, -2),
                 LaurentPoly::monomial(3)));
    // f = -a1+ a2+ on the second realization
    CHECK(realize(UGenerator::f(), 2) ==
          single(BosonForm::Res2, mono(BosonForm::Res2, 1, 1, 0, 0), LaurentPoly::integer(-1)));
    // f^(2) = (+1) a1+^(2) a2+^2
    CHECK(realize(UGenerator::f_divided(2), 2) ==
          single(BosonForm::Res2, mono(BosonForm::Res2, 2, 2, 0, 0), LaurentPoly::one()));
    // K = K1 K2^-1 and K = q^-1 K1^-1 K2^-1
    CHECK(realize(UGenerator::k(), 1) ==
          single(BosonForm::Res1, mono(BosonForm::Res1, 0, 0, 0, 0, 1, -1), LaurentPoly::one()));
    CHECK(realize(UGenerator::k(), 2) ==
          single(BosonForm::Res2, mono(BosonForm::Res2, 0, 0, 0, 0, -1, -1),
                 LaurentPoly::monomial(-1)));
    CHECK_THROWS_AS((void)realize(UGenerator::kzero(5), 1), UnsupportedOperation);
    CHECK_THROWS_AS((void)realize(UGenerator::e(), 3), UsageError);
}

TEST_CASE("weights and digits") {
    const Weight w = weight_digits(7, 5);
    CHECK(w.lambda == 7);
    CHECK(w.d == Digits{2, 1});
    CHECK(weight_digits(0, 5).d == Digits{0, 0});
    CHECK(weight_digits(-4, 3).d == Digits{2, -2});
}

TEST_CASE("degree-p divided K-operator eigenvalue from its defining product") {
    // product over s of (q^{m+1-s} - q^{s-1-m}) / (q^s - q^{-s}), divided out
    // exactly at generic q, then specialized: must equal the upper digit m1.
    for (std::int64_t p : {3, 5, 7}) {
        const auto ctx = make_cyclo_context(p);
        for (std::int64_t m = -3 * p * p; m <= 3 * p * p; ++m) {
            LaurentPoly num = LaurentPoly::one();
            LaurentPoly den = LaurentPoly::one();
            for (std::int64_t s = 1; s <= p; ++s) {
                num *= LaurentPoly::monomial(m + 1 - s) - LaurentPoly::monomial(s - 1 - m);
                den *= LaurentPoly::monomial(s) - LaurentPoly::monomial(-s);
            }
            const auto quotient = divide_exact(num, den);
            REQUIRE(quotient.has_value());
            CHECK(specialize(*quotient, ctx) ==
                  CyclotomicNumber::from_rational(BigRat(digits(m, p).n1), ctx));
        }
    }
}

TEST_CASE("defining relations hold on both realizations") {
    for (int which : {1, 2}) {
        const RelationReport rep = verify_defining_relations(which, 5);
        CHECK(rep.all_passed);
        CHECK(!rep.counterexample.has_value());
        for (const auto& check : rep.checks) {
            CHECK(check.passed);
            CHECK(check.cases > 0);
        }
    }
    CHECK_THROWS_AS((void)verify_defining_relations(1, 0), UsageError);
}

TEST_CASE("sign-flipped realization is caught with a located counterexample") {
    const RelationReport r1 = verify_defining_relations(1, 3, RealizationVariant::NegatedF);
    REQUIRE(!r1.all_passed);
    REQUIRE(r1.counterexample.has_value());
    CHECK(r1.counterexample->relation.find("[e,f]") != std::string::npos);
    CHECK(r1.counterexample->label == "f(0,1)");
    CHECK(!r1.counterexample->lhs.empty());
    CHECK(!r1.counterexample->rhs.empty());

    const RelationReport r2 = verify_defining_relations(2, 3, RealizationVariant::NegatedF);
    REQUIRE(!r2.all_passed);
    REQUIRE(r2.counterexample.has_value());
    CHECK(r2.counterexample->label == "g(0,0)");
}
