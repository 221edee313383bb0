#include "qfock/q_numbers.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "qfock/errors.hpp"

namespace qfock {

LaurentPoly q_int(std::int64_t n) {
    if (n == 0) return LaurentPoly::zero();
    const bool neg = n < 0;
    const std::int64_t a = neg ? -n : n;
    LaurentPoly p;
    for (std::int64_t k = a - 1; k >= 1 - a; k -= 2) p.add_term(k, neg ? -1 : 1);
    return p;
}

LaurentPoly q_factorial(std::int64_t m) {
    if (m < 0) throw UsageError("q_factorial: m must be nonnegative, got " + std::to_string(m));
    // Memoized per thread; values are immutable so this is transparent.
    thread_local std::vector<LaurentPoly> cache{LaurentPoly::one()};
    while (static_cast<std::int64_t>(cache.size()) <= m) {
        cache.push_back(cache.back() * q_int(static_cast<std::int64_t>(cache.size())));
    }
    return cache[static_cast<size_t>(m)];
}

LaurentPoly q_binomial(std::int64_t n, std::int64_t m) {
    if (m < 0) return LaurentPoly::zero();
    if (m == 0) return LaurentPoly::one();
    // A [0]_q factor appears in the numerator product exactly when 0 <= n < m.
    if (n >= 0 && n < m) return LaurentPoly::zero();
    thread_local std::map<std::pair<std::int64_t, std::int64_t>, LaurentPoly> cache;
    if (auto it = cache.find({n, m}); it != cache.end()) return it->second;
    LaurentPoly acc = LaurentPoly::one();
    // Interleave multiplications and exact divisions so intermediate degrees
    // stay small: [n over j] = [n over j-1] * [n-j+1] / [j].
    for (std::int64_t j = 1; j <= m; ++j) {
        acc *= q_int(n - j + 1);
        auto quotient = divide_exact(acc, q_int(j));
        if (!quotient) {
            throw std::logic_error("q_binomial: non-exact division for n=" + std::to_string(n) +
                                   " m=" + std::to_string(m) + " at step " + std::to_string(j));
        }
        acc = std::move(*quotient);
    }
    cache.emplace(std::make_pair(n, m), acc);
    return acc;
}

namespace {

// q^n - 1 and the recursion over proper divisors. Internal helper: n here is
// any positive integer (the divisors of an odd p include 1).
LaurentPoly cyclotomic_any(std::int64_t n) {
    LaurentPoly num = LaurentPoly::monomial(n) - LaurentPoly::one();
    for (std::int64_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto quotient = divide_exact(num, cyclotomic_any(d));
        if (!quotient) throw std::logic_error("cyclotomic recursion: division not exact");
        num = std::move(*quotient);
    }
    return num;
}

} // namespace

void require_valid_p(std::int64_t p) {
    if (p <= 1 || p % 2 == 0) {
        throw UsageError("p must be an odd integer > 1, got " + std::to_string(p));
    }
}

LaurentPoly cyclotomic_polynomial(std::int64_t p) {
    require_valid_p(p);
    return cyclotomic_any(p);
}

Digits digits(std::int64_t n, std::int64_t p) {
    require_valid_p(p);
    std::int64_t n0 = n % p;
    if (n0 < 0) n0 += p;
    return Digits{n0, (n - n0) / p};
}

std::int64_t q_binom_at_root(std::int64_t n, std::int64_t p) {
    return digits(n, p).n1;
}

const LaurentPoly& QBinomialTable::at(std::int64_t n, std::int64_t m) {
    if (n < 0 || m < 0 || m > n) {
        throw std::logic_error("QBinomialTable supports n >= m >= 0 only");
    }
    auto it = cache_.find({n, m});
    if (it != cache_.end()) return it->second;
    LaurentPoly value;
    if (m == 0 || m == n) {
        value = LaurentPoly::one();
    } else {
        // [n over m] = q^-m [n-1 over m] + q^(n-m) [n-1 over m-1]
        value = LaurentPoly::monomial(-m) * at(n - 1, m) +
                LaurentPoly::monomial(n - m) * at(n - 1, m - 1);
    }
    return cache_.emplace(std::make_pair(n, m), std::move(value)).first->second;
}

} // namespace qfock
