#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qfock/bigint.hpp"

namespace qfock {

/// Element of Z[q, q^-1], stored as a sparse exponent -> coefficient map.
///
/// The map never holds a zero coefficient, so equality of maps is equality
/// of ring elements. All operations are pure; values are freely shareable.
class LaurentPoly {
public:
    using Exp = std::int64_t;
    using TermMap = std::map<Exp, BigInt>;

    LaurentPoly() = default; // zero

    static LaurentPoly zero() { return LaurentPoly{}; }
    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly integer(BigInt n);
    /// c * q^k
    static LaurentPoly monomial(Exp k, BigInt c = BigInt(1));

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const TermMap& terms() const { return terms_; }
    BigInt coeff(Exp k) const;
    /// Lowest/highest exponent with a nonzero coefficient; requires nonzero.
    Exp min_exp() const;
    Exp max_exp() const;

    /// Image under q -> q^-1.
    LaurentPoly bar() const;
    LaurentPoly pow(std::uint32_t n) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

    bool operator==(const LaurentPoly& rhs) const = default;

    /// Rendering contract used by the CLI and golden tests: `c*q^k` terms
    /// joined by " + ", highest exponent first, exponent 0 written as the
    /// bare coefficient, coefficient +-1 elided (e.g. "q^2 + 1 + q^-2").
    std::string str() const;

    void add_term(Exp k, const BigInt& c);

private:
    TermMap terms_;
};

/// Outcome of Laurent division. `exact` means zero remainder and an
/// integer-coefficient quotient; otherwise `remainder_str` renders the
/// (rational-coefficient) remainder for diagnostics.
struct LaurentDivision {
    bool exact = false;
    LaurentPoly quotient;     // valid only when exact
    std::string remainder_str;
};

LaurentDivision divide(const LaurentPoly& numerator, const LaurentPoly& denominator);

/// Quotient if the division is exact over Z[q, q^-1], nullopt otherwise.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& numerator,
                                        const LaurentPoly& denominator);

} // namespace qfock
