#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qfock/cyclotomic.hpp"
#include "qfock/fock.hpp"

namespace qfock {

/// Column-major action matrix over Q(eps): cols[j] lists (i, c) meaning the
/// generator sends basis_j to sum of c * basis_i. Weight-graded throughout.
struct SparseMatrix {
    std::int64_t dim = 0;
    std::vector<std::vector<std::pair<std::int64_t, CyclotomicNumber>>> cols;
};

struct GeneratorAction {
    std::string name; // "e^(r)" / "f^(r)"
    SparseMatrix matrix;
    /// Per column: a nonzero part of this column's image lies beyond the
    /// window and was dropped (infinite kind only).
    std::vector<char> exits_window;
};

struct HighestWeightVector {
    std::int64_t index = 0; // weight spaces here are one-dimensional
    Weight weight;
};

/// Which irreducible highest weight module a constructed object realizes.
struct Classification {
    std::string object; // "module" | "maximal submodule" | "quotient by maximal submodule"
    std::int64_t lambda = 0;
    std::optional<std::int64_t> hw_index; // basis index of the (coset) highest weight vector
    std::optional<std::int64_t> dim;      // finite cases only
};

/// Structured description of one constructed module: basis, exact action
/// matrices, weights, submodule structure and classification.
struct ModuleReport {
    enum class Kind { Weyl, Infinite };

    Kind kind = Kind::Weyl;
    std::int64_t p = 0;
    std::int64_t m = 0;      // Weyl: maximal weight
    std::int64_t s = 0;      // Infinite: diagonal shift of the g-basis
    std::int64_t window = 0; // Infinite: largest retained basis index
    CycloContextPtr ctx;

    std::vector<FockLabel> basis;
    std::vector<Weight> weights;

    /// Divided-power actions for 1 <= r <= max_divided_power; index r-1.
    /// The closure generator set deliberately includes every r rather than
    /// relying on {e, f, e^(p), f^(p)} alone to generate.
    std::int64_t max_divided_power = 0;
    std::vector<GeneratorAction> e_actions;
    std::vector<GeneratorAction> f_actions;
    std::vector<CyclotomicNumber> k_diagonal;  // K eigenvalues eps^{lambda0}
    std::vector<std::int64_t> kzero_diagonal;  // [K;0;p] eigenvalues lambda1

    std::vector<std::int64_t> maximal_submodule; // basis indices, sorted; empty iff irreducible
    std::vector<std::int64_t> boundary_flags;    // infinite kind: f / f^(p) image exits window
    std::vector<HighestWeightVector> highest_weight_vectors;
    std::vector<Classification> classifications;

    std::int64_t dim() const { return static_cast<std::int64_t>(basis.size()); }
    const GeneratorAction& e_div(std::int64_t r) const;
    const GeneratorAction& f_div(std::int64_t r) const;
    std::string kind_str() const; // "weyl(m=12)" / "infinite(s=7, window=18)"
};

/// Row-reduced subspace basis over Q(eps); rows are coordinate vectors in a
/// module report's basis, in reduced echelon form with ascending pivots.
struct SubspaceBasis {
    std::vector<std::vector<CyclotomicNumber>> rows;
    std::vector<std::int64_t> pivots;
    /// Some generator application left the window during the fixed point, so
    /// the result is a lower bound (infinite kind only).
    bool window_truncated = false;

    std::int64_t rank() const { return static_cast<std::int64_t>(rows.size()); }
    /// Reduce v against the rows; true if v was already in the span.
    bool contains(std::vector<CyclotomicNumber> v) const;
    /// Insert v if independent; keeps reduced echelon form. Returns whether
    /// the rank grew.
    bool insert(std::vector<CyclotomicNumber> v);
};

/// The (m+1)-dimensional module spanned by f(m-i, i) with the exact action
/// matrices; every named action entry is cross-checked against the closed
/// forms and against the Fock-space action on the embedded labels.
ModuleReport weyl_module(std::int64_t p, std::int64_t m);

/// Basis indices of the unique proper submodule: {r : m0 < r0 < p, r1 < m1}
/// in digit notation. Empty exactly in the irreducible cases. The set is
/// validated for closedness under the action matrices.
std::vector<std::int64_t> weyl_maximal_submodule(std::int64_t p, std::int64_t m);

/// The diagonal submodule of the second Fock space with basis g(i, i+s)
/// (s >= 0) or g(i+|s|, i) (s < 0), truncated at basis index `window`.
/// Requires window >= 4p.
ModuleReport infinite_module(std::int64_t p, std::int64_t s, std::int64_t window);

/// Least subspace containing the seeds (coordinate vectors) closed under the
/// report's generator matrices; exact fixed-point iteration.
SubspaceBasis closure(const std::vector<std::vector<CyclotomicNumber>>& seeds,
                      const ModuleReport& report);

/// Operational irreducibility. Finite kind: the closure of every single
/// basis vector is the whole space. Infinite kind: every basis vector
/// reaches the highest weight vector through e^(r) steps (these lower
/// indices, so the window cannot leak), and the highest weight vector
/// reaches every window index through f^(r) steps with nonzero coefficient.
bool is_irreducible(const ModuleReport& report);

/// All basis-spanned weight vectors killed by both e and e^(p), computed per
/// weight space by exact kernel intersection.
std::vector<HighestWeightVector> find_highest_weight_vectors(const ModuleReport& report);

struct ClassifyRealization {
    std::string kind; // "weyl-head" | "infinite-module" | "infinite-quotient" | "infinite-submodule"
    std::string description;
    std::optional<std::int64_t> m; // weyl parameter
    std::optional<std::int64_t> s; // infinite parameter
};

struct ClassifyRecipe {
    std::int64_t p = 0;
    std::int64_t lambda = 0;
    ClassifyRealization primary;
    std::vector<ClassifyRealization> alternates;
    std::optional<std::int64_t> finite_dim; // lambda >= 0 only
};

/// Which constructed object realizes the irreducible highest weight module
/// with highest weight lambda, plus the alternate realizations when lambda
/// matches their forms.
ClassifyRecipe classify(std::int64_t p, std::int64_t lambda);

} // namespace qfock
