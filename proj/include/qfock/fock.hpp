#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qfock/cyclotomic.hpp"
#include "qfock/laurent.hpp"
#include "qfock/uq.hpp"

namespace qfock {

/// F1 carries the basis f(r1,r2) = a1+^(r1) a2+^(r2) |0> (realization 1),
/// F2 the basis g(r1,r2) = a1+^(r1) a2+^r2 |0> (realization 2).
enum class FockSpace { F1, F2 };

FockSpace space_for(int which);
int which_for(FockSpace space);

struct FockLabel {
    FockSpace space = FockSpace::F1;
    std::int64_t r1 = 0, r2 = 0;

    bool operator==(const FockLabel&) const = default;
    auto operator<=>(const FockLabel&) const = default;
    std::string str() const; // "f(r1,r2)" / "g(r1,r2)"
};

/// Finitely supported vector over one Fock space. Scalar is LaurentPoly for
/// the generic-q module and CyclotomicNumber after specialization; the
/// action formulas are written once against that scalar contract.
template <typename Scalar>
struct FockVector {
    FockSpace space = FockSpace::F1;
    std::map<FockLabel, Scalar> terms;

    static FockVector basis(const FockLabel& label, Scalar one);
    bool is_zero() const { return terms.empty(); }
    void add(const FockLabel& label, const Scalar& c);
    FockVector& operator+=(const FockVector& rhs);
    bool operator==(const FockVector& rhs) const = default;
    std::string str() const; // `c · f(r1,r2)` terms, ascending (r1, r2)
};

using GenericFockVector = FockVector<LaurentPoly>;
using RootFockVector = FockVector<CyclotomicNumber>;

GenericFockVector generic_basis(const FockLabel& label);
RootFockVector root_basis(const FockLabel& label, const CycloContextPtr& ctx);

/// Closed-form action of a generator on a Fock vector under realization
/// `which` (1 on F1, 2 on F2; mismatch rejected). Labels pushed out of the
/// nonnegative quadrant contribute zero: either the closed-form coefficient
/// vanishes or the target vector is absent, matching the vacuum dynamics
/// (the oracle equivalence suite pins this down case by case).
GenericFockVector act(const UGenerator& g, const GenericFockVector& v, int which);
RootFockVector act(const UGenerator& g, const RootFockVector& v, int which);

/// Independent action oracle: multiply the realized boson image of g by the
/// label's creator monomial, normal order, kill annihilators on the vacuum.
/// Must agree with act() everywhere; KZero has no boson image and is
/// rejected here just as in realize().
GenericFockVector act_oracle(const UGenerator& g, const FockLabel& label, int which);

/// Weight of a basis label: r1 - r2 on F1 and -(r1 + r2 + 1) on F2, with
/// floor-convention digits.
Weight weight_of(const FockLabel& label, int which, std::int64_t p);

/// Coefficient-wise q -> eps; terms that specialize to zero are dropped.
RootFockVector specialize_vector(const GenericFockVector& v, std::int64_t p);
RootFockVector specialize_vector(const GenericFockVector& v, const CycloContextPtr& ctx);

} // namespace qfock
