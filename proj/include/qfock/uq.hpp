#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qfock/q_numbers.hpp"
#include "qfock/qboson.hpp"

namespace qfock {

enum class UKind {
    EDivided, // e^(r); e = e^(1)
    FDivided, // f^(r); f = f^(1)
    K,
    KInv,
    KZero // [K;0;p]: diagonal on weight vectors, never a boson element
};

struct UGenerator {
    UKind kind;
    std::int64_t r = 1; // divided-power order, >= 1
    std::int64_t p = 0; // root order, KZero only

    static UGenerator e() { return e_divided(1); }
    static UGenerator f() { return f_divided(1); }
    static UGenerator e_divided(std::int64_t r);
    static UGenerator f_divided(std::int64_t r);
    static UGenerator k() { return UGenerator{UKind::K}; }
    static UGenerator k_inv() { return UGenerator{UKind::KInv}; }
    static UGenerator kzero(std::int64_t p);

    std::string str() const;
};

/// Weight of a type-1 module vector: K acts by eps^{lambda0} and the
/// degree-p divided K-operator by lambda1, where lambda = lambda0 + p*lambda1.
struct Weight {
    std::int64_t lambda = 0;
    Digits d;
    bool operator==(const Weight&) const = default;
};

Weight weight_digits(std::int64_t m, std::int64_t p);

/// Test hook: NegatedF flips the sign of every f^(r) image, which must break
/// the commutator relation (negative control for the verification harness).
enum class RealizationVariant { Standard, NegatedF };

/// The q-boson image of a generator under realization 1 (target form Res1)
/// or realization 2 (target form Res2). KZero has no boson image (its
/// defining product has denominators that vanish at the root of unity) and
/// is rejected with UnsupportedOperation.
BosonElement realize(const UGenerator& g, int which,
                     RealizationVariant variant = RealizationVariant::Standard);

struct RelationCounterexample {
    std::string relation;
    std::string label; // basis vector, e.g. "f(0,1)"
    std::string lhs;
    std::string rhs;
};

struct RelationCheck {
    std::string relation;
    std::int64_t cases = 0;
    bool passed = true;
};

struct RelationReport {
    int which = 1;
    std::int64_t bound = 0;
    bool all_passed = true;
    std::vector<RelationCheck> checks;
    std::optional<RelationCounterexample> counterexample; // first failure
};

/// Checks the defining relations of the quantum algebra as operator
/// identities on all Fock basis vectors with r1, r2 <= bound, symbolically
/// in q. The commutator relation is checked with cleared denominators,
///   (q - q^-1)[e,f] = K - K^-1,
/// and divided powers are checked through e^(r) [r]! = e^r (same for f).
RelationReport verify_defining_relations(int which, std::int64_t bound,
                                         RealizationVariant variant = RealizationVariant::Standard);

} // namespace qfock
