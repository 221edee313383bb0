#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qfock {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;        // the mathematical content of the criterion
    bool within_budget = false; // wall clock stayed inside the stated budget
    double seconds = 0.0;
    double budget_seconds = 0.0;
    std::string detail; // first counterexample on failure, empty otherwise
};

/// Seeded confluence check: random generator words folded into normal form
/// with the two rewrite strategies must agree exactly (including which words
/// fall outside the integral form).
struct ConfluenceResult {
    std::int64_t words = 0;
    bool passed = true;
    std::string detail;
};

ConfluenceResult check_confluence(std::uint64_t seed, std::int64_t count);

/// The full verification battery. `seed` only drives the pseudorandom word
/// generation; every mathematical outcome is seed-independent.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

} // namespace qfock
