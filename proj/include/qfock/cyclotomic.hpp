#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qfock/bigint.hpp"
#include "qfock/laurent.hpp"
#include "qfock/q_numbers.hpp"

namespace qfock {

/// Shared immutable data for Q(eps) with eps a primitive p-th root of unity:
/// the modulus Phi_p and its degree phi(p). Construction checks that the
/// modulus really forces eps^p = 1 and eps^k != 1 for 0 < k < p.
class CycloContext {
public:
    explicit CycloContext(std::int64_t p);

    std::int64_t p() const { return p_; }
    std::size_t phi() const { return modulus_.size() - 1; }
    /// Monic integer coefficients of Phi_p, constant term first.
    const std::vector<BigInt>& modulus() const { return modulus_; }

private:
    std::int64_t p_;
    std::vector<BigInt> modulus_;
};

using CycloContextPtr = std::shared_ptr<const CycloContext>;

CycloContextPtr make_cyclo_context(std::int64_t p);

/// Element of Q(eps): a rational-coefficient polynomial in eps of degree
/// < phi(p), reduced mod Phi_p. Field element; every nonzero value is
/// invertible. Immutable in spirit: all operations return new values.
class CyclotomicNumber {
public:
    CyclotomicNumber() = default; // rational zero with no field attached; p() == 0

    /// From raw polynomial coefficients in eps (constant first); the input
    /// is reduced mod Phi_p, so any degree is accepted.
    CyclotomicNumber(CycloContextPtr ctx, std::vector<BigRat> coeffs);

    static CyclotomicNumber zero(const CycloContextPtr& ctx);
    static CyclotomicNumber one(const CycloContextPtr& ctx);
    static CyclotomicNumber from_rational(const BigRat& v, const CycloContextPtr& ctx);
    static CyclotomicNumber from_rational(const BigRat& v, std::int64_t p);
    /// eps^k (k may be negative; exponents are taken mod p).
    static CyclotomicNumber root_power(std::int64_t k, const CycloContextPtr& ctx);

    std::int64_t p() const { return ctx_ ? ctx_->p() : 0; }
    const CycloContextPtr& context() const { return ctx_; }
    bool is_zero() const;
    /// The coefficient vector (length phi(p)), constant term first.
    const std::vector<BigRat>& coefficients() const { return coeffs_; }

    CyclotomicNumber operator-() const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// Phi_p. Throws std::domain_error on zero.
    CyclotomicNumber invert() const;

    bool operator==(const CyclotomicNumber& rhs) const;
    bool operator!=(const CyclotomicNumber& rhs) const { return !(*this == rhs); }

    /// `c*e^k` terms joined by " + ", highest power of eps first.
    std::string str() const;

private:
    CycloContextPtr ctx_;
    std::vector<BigRat> coeffs_;
};

/// Image of P under q -> eps, eps a primitive p-th root of unity.
CyclotomicNumber specialize(const LaurentPoly& P, std::int64_t p);
CyclotomicNumber specialize(const LaurentPoly& P, const CycloContextPtr& ctx);

} // namespace qfock
