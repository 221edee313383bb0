#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfock/fock.hpp"

using namespace qfock;

namespace {

GenericFockVector expect_single(FockSpace space, std::int64_t r1, std::int64_t r2,
                                LaurentPoly c) {
    GenericFockVector v;
    v.space = space;
    v.add(FockLabel{space, r1, r2}, c);
    return v;
}

} // namespace

TEST_CASE("labels and rendering") {
    CHECK(FockLabel{FockSpace::F1, 2, 0}.str() == "f(2,0)");
    CHECK(FockLabel{FockSpace::F2, 0, 3}.str() == "g(0,3)");
    const GenericFockVector v = expect_single(FockSpace::F1, 2, 0, q_int(2));
    CHECK(v.str() == "(q + q^-1) · f(2,0)");
    GenericFockVector z;
    CHECK(z.str() == "0");
}

TEST_CASE("raising action on the first space") {
    const FockLabel l{FockSpace::F1, 1, 1};
    const GenericFockVector out = act(UGenerator::e(), generic_basis(l), 1);
    CHECK(out == expect_single(FockSpace::F1, 2, 0, q_int(2)));
    CHECK(act_oracle(UGenerator::e(), l, 1) == out);
    // space mismatch rejected
    CHECK_THROWS_AS((void)act(UGenerator::e(), generic_basis(l), 2), std::invalid_argument);
}

TEST_CASE("p-th divided lowering on an embedded finite module vector") {
    // v_1 inside the m=10 family at p=3 is f(9,1); the image carries the
    // integer coefficient (r_1 + 1) = 1.
    const auto ctx = make_cyclo_context(3);
    const FockLabel l{FockSpace::F1, 9, 1};
    const RootFockVector out = act(UGenerator::f_divided(3), root_basis(l, ctx), 1);
    REQUIRE(out.terms.size() == 1);
    CHECK(out.terms.begin()->first == FockLabel{FockSpace::F1, 6, 4});
    CHECK(out.terms.begin()->second == CyclotomicNumber::one(ctx));
}

TEST_CASE("lowering edge of the second space") {
    for (std::int64_t r1 : {0, 1, 5}) {
        const FockLabel l{FockSpace::F2, r1, 0};
        CHECK(act(UGenerator::e(), generic_basis(l), 2).is_zero());
        CHECK(act_oracle(UGenerator::e(), l, 2).is_zero());
    }
    // nonzero closed-form coefficient on an absent vector still gives zero
    const FockLabel l{FockSpace::F2, 0, 2};
    CHECK(act(UGenerator::e(), generic_basis(l), 2).is_zero());
    CHECK(act_oracle(UGenerator::e(), l, 2).is_zero());
}

TEST_CASE("oracle values on the second space") {
    CHECK(act_oracle(UGenerator::f(), FockLabel{FockSpace::F2, 0, 0}, 2) ==
          expect_single(FockSpace::F2, 1, 1, LaurentPoly::integer(-1)));
    CHECK(act_oracle(UGenerator::k(), FockLabel{FockSpace::F2, 2, 3}, 2) ==
          expect_single(FockSpace::F2, 2, 3, LaurentPoly::monomial(-6)));
}

TEST_CASE("weights") {
    CHECK(weight_of(FockLabel{FockSpace::F1, 3, 1}, 1, 5) == weight_digits(2, 5));
    CHECK(weight_of(FockLabel{FockSpace::F2, 0, 3}, 2, 3) == weight_digits(-4, 3));
    CHECK(weight_of(FockLabel{FockSpace::F2, 0, 0}, 2, 5) == weight_digits(-1, 5));
    CHECK(weight_of(FockLabel{FockSpace::F2, 0, 3}, 2, 3).d == Digits{2, -2});
}

TEST_CASE("weight additivity of the divided actions") {
    for (const int which : {1, 2}) {
        const std::int64_t p = 5;
        for (std::int64_t r1 = 0; r1 <= 6; ++r1) {
            for (std::int64_t r2 = 0; r2 <= 6; ++r2) {
                const FockLabel l{space_for(which), r1, r2};
                const Weight base = weight_of(l, which, p);
                for (std::int64_t r = 1; r <= 4; ++r) {
                    for (const bool raising : {true, false}) {
                        const UGenerator g =
                            raising ? UGenerator::e_divided(r) : UGenerator::f_divided(r);
                        const GenericFockVector out = act(g, generic_basis(l), which);
                        for (const auto& [label, c] : out.terms) {
                            const Weight w = weight_of(label, which, p);
                            CHECK(w.lambda == base.lambda + (raising ? 2 * r : -2 * r));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("type-1 property: K^p is the identity after specialization") {
    for (const std::int64_t p : {3, 5}) {
        const auto ctx = make_cyclo_context(p);
        for (const int which : {1, 2}) {
            for (std::int64_t r1 = 0; r1 <= 4; ++r1) {
                for (std::int64_t r2 = 0; r2 <= 4; ++r2) {
                    const FockLabel l{space_for(which), r1, r2};
                    RootFockVector v = root_basis(l, ctx);
                    for (std::int64_t i = 0; i < p; ++i) v = act(UGenerator::k(), v, which);
                    CHECK(v == root_basis(l, ctx));
                }
            }
        }
    }
}

TEST_CASE("diagonal degree-p K-operator") {
    const FockLabel l{FockSpace::F2, 1, 3}; // weight -(1+3+1) = -5
    const GenericFockVector generic = act(UGenerator::kzero(5), generic_basis(l), 2);
    CHECK(generic == expect_single(FockSpace::F2, 1, 3, q_binomial(-5, 5)));
    const auto ctx = make_cyclo_context(5);
    const RootFockVector at_root = act(UGenerator::kzero(5), root_basis(l, ctx), 2);
    REQUIRE(at_root.terms.size() == 1);
    CHECK(at_root.terms.begin()->second ==
          CyclotomicNumber::from_rational(BigRat(digits(-5, 5).n1), ctx));
    // root order must match the scalar field
    CHECK_THROWS_AS((void)act(UGenerator::kzero(7), root_basis(l, ctx), 2),
                    std::invalid_argument);
}

TEST_CASE("specialization of vectors") {
    const std::int64_t p = 3;
    const auto ctx = make_cyclo_context(p);
    SUBCASE("coefficients that die at the root drop out") {
        GenericFockVector v;
        v.space = FockSpace::F1;
        v.add(FockLabel{FockSpace::F1, 0, 0}, q_int(p));
        CHECK(specialize_vector(v, p).is_zero());
    }
    SUBCASE("q^p becomes 1") {
        GenericFockVector v;
        v.space = FockSpace::F1;
        v.add(FockLabel{FockSpace::F1, 1, 2}, LaurentPoly::one());
        v.add(FockLabel{FockSpace::F1, 0, 0}, LaurentPoly::monomial(p));
        const RootFockVector w = specialize_vector(v, p);
        REQUIRE(w.terms.size() == 2);
        for (const auto& [label, c] : w.terms) CHECK(c == CyclotomicNumber::one(ctx));
    }
    SUBCASE("binomial coefficients specialize to the product-formula value") {
        GenericFockVector v;
        v.space = FockSpace::F2;
        v.add(FockLabel{FockSpace::F2, 1, 1}, q_binomial(4, 2));
        const RootFockVector w = specialize_vector(v, p);
        const CyclotomicNumber via_field = specialize(q_int(4), ctx) * specialize(q_int(3), ctx) *
                                           specialize(q_int(2), ctx).invert();
        REQUIRE(w.terms.size() == 1);
        CHECK(w.terms.begin()->second == via_field);
    }
}

TEST_CASE("closed form matches the oracle on a small grid") {
    const std::int64_t p = 3;
    for (const int which : {1, 2}) {
        for (std::int64_t r1 = 0; r1 <= 4; ++r1) {
            for (std::int64_t r2 = 0; r2 <= 4; ++r2) {
                const FockLabel l{space_for(which), r1, r2};
                for (std::int64_t r = 1; r <= 4; ++r) {
                    CHECK(act(UGenerator::e_divided(r), generic_basis(l), which) ==
                          act_oracle(UGenerator::e_divided(r), l, which));
                    CHECK(act(UGenerator::f_divided(r), generic_basis(l), which) ==
                          act_oracle(UGenerator::f_divided(r), l, which));
                }
                CHECK(act(UGenerator::k(), generic_basis(l), which) ==
                      act_oracle(UGenerator::k(), l, which));
                CHECK(act(UGenerator::k_inv(), generic_basis(l), which) ==
                      act_oracle(UGenerator::k_inv(), l, which));
            }
        }
    }
}
