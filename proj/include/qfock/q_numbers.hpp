#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "qfock/laurent.hpp"

namespace qfock {

/// [n]_q = (q^n - q^-n) / (q - q^-1); antisymmetric in n, [0]_q = 0.
LaurentPoly q_int(std::int64_t n);

/// [m]_q! = [m]_q [m-1]_q ... [1]_q; empty product for m = 0.
LaurentPoly q_factorial(std::int64_t m);

/// Gaussian binomial [n over m]_q = [n][n-1]...[n-m+1] / [m]!.
///
/// Zero for m < 0 by convention. n may be any integer; the quotient is
/// always denominator-free, and a failed exact division throws (it would
/// signal an arithmetic bug, never bad input).
LaurentPoly q_binomial(std::int64_t n, std::int64_t m);

/// p-th cyclotomic polynomial for odd p > 1 (p need not be prime).
LaurentPoly cyclotomic_polynomial(std::int64_t p);

/// n = n0 + p*n1 with 0 <= n0 < p (floor-division convention, so the
/// identity [n over p]_eps = n1 holds for every integer n).
struct Digits {
    std::int64_t n0 = 0;
    std::int64_t n1 = 0;
    bool operator==(const Digits&) const = default;
};

Digits digits(std::int64_t n, std::int64_t p);

/// [n over p] evaluated at a primitive p-th root of unity: equals digits(n,p).n1.
std::int64_t q_binom_at_root(std::int64_t n, std::int64_t p);

/// Throws UsageError unless p is an odd integer > 1.
void require_valid_p(std::int64_t p);

/// Memoized [n over m]_q table for n >= m >= 0, filled through the
/// Pascal-type recurrence. Not thread-safe; intended as a private builder
/// aid where many nearby binomials are needed (module action matrices).
class QBinomialTable {
public:
    const LaurentPoly& at(std::int64_t n, std::int64_t m);

private:
    std::map<std::pair<std::int64_t, std::int64_t>, LaurentPoly> cache_;
};

} // namespace qfock
