#include "qfock/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

#include "qfock/errors.hpp"

namespace qfock {

namespace {

using Poly = std::vector<BigRat>; // dense, constant term first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

bool is_zero_poly(const Poly& a) { return a.empty(); }

Poly mul(const Poly& a, const Poly& b) {
    if (is_zero_poly(a) || is_zero_poly(b)) return {};
    Poly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    trim(out);
    return out;
}

Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Quotient; a becomes the remainder. b must be nonzero.
Poly divmod(Poly& a, const Poly& b) {
    Poly quot;
    if (a.size() < b.size()) return quot;
    quot.assign(a.size() - b.size() + 1, BigRat(0));
    const BigRat& lead = b.back();
    for (size_t i = quot.size(); i-- > 0;) {
        if (a[i + b.size() - 1] == 0) continue;
        BigRat c = a[i + b.size() - 1] / lead;
        quot[i] = c;
        for (size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
    }
    trim(a);
    trim(quot);
    return quot;
}

// In-place reduction of a polynomial mod the monic modulus; result length phi.
void reduce_mod(std::vector<BigRat>& raw, const std::vector<BigInt>& mod) {
    const size_t phi = mod.size() - 1;
    if (raw.size() < phi) {
        raw.resize(phi);
        return;
    }
    for (size_t i = raw.size(); i-- > phi;) {
        if (raw[i] == 0) continue;
        BigRat c = raw[i];
        raw[i] = 0;
        for (size_t j = 0; j < phi; ++j) raw[i - phi + j] -= c * BigRat(mod[j]);
    }
    raw.resize(phi);
}

} // namespace

CycloContext::CycloContext(std::int64_t p) : p_(p) {
    require_valid_p(p);
    const LaurentPoly phi = cyclotomic_polynomial(p);
    modulus_.assign(static_cast<size_t>(phi.max_exp()) + 1, BigInt(0));
    for (const auto& [k, c] : phi.terms()) modulus_[static_cast<size_t>(k)] = c;
    if (modulus_.back() != 1) throw std::logic_error("cyclotomic polynomial must be monic");

    // eps^p = 1 and eps^k != 1 for 0 < k < p.
    for (std::int64_t k = 1; k <= p; ++k) {
        std::vector<BigRat> xk(static_cast<size_t>(k) + 1, BigRat(0));
        xk.back() = 1;
        reduce_mod(xk, modulus_);
        bool is_unit = xk[0] == 1;
        for (size_t i = 1; i < xk.size() && is_unit; ++i) is_unit = xk[i] == 0;
        if (k < p && is_unit) throw std::logic_error("root is not primitive: eps^k = 1 for k < p");
        if (k == p && !is_unit) throw std::logic_error("eps^p != 1: bad cyclotomic modulus");
    }
}

CycloContextPtr make_cyclo_context(std::int64_t p) {
    // Contexts are immutable; one per (thread, p) is plenty.
    thread_local std::map<std::int64_t, CycloContextPtr> cache;
    auto it = cache.find(p);
    if (it == cache.end()) {
        it = cache.emplace(p, std::make_shared<const CycloContext>(p)).first;
    }
    return it->second;
}

CyclotomicNumber::CyclotomicNumber(CycloContextPtr ctx, std::vector<BigRat> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    reduce_mod(coeffs_, ctx_->modulus());
}

CyclotomicNumber CyclotomicNumber::zero(const CycloContextPtr& ctx) {
    return CyclotomicNumber(ctx, {});
}

CyclotomicNumber CyclotomicNumber::one(const CycloContextPtr& ctx) {
    return from_rational(BigRat(1), ctx);
}

CyclotomicNumber CyclotomicNumber::from_rational(const BigRat& v, const CycloContextPtr& ctx) {
    return CyclotomicNumber(ctx, {v});
}

CyclotomicNumber CyclotomicNumber::from_rational(const BigRat& v, std::int64_t p) {
    return from_rational(v, make_cyclo_context(p));
}

CyclotomicNumber CyclotomicNumber::root_power(std::int64_t k, const CycloContextPtr& ctx) {
    std::int64_t e = k % ctx->p();
    if (e < 0) e += ctx->p();
    std::vector<BigRat> raw(static_cast<size_t>(e) + 1);
    raw.back() = 1;
    return CyclotomicNumber(ctx, std::move(raw));
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

namespace {

void check_same_field(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.p() != 0 && b.p() != 0 && a.p() != b.p()) {
        throw std::invalid_argument("mixing cyclotomic fields: p=" + std::to_string(a.p()) +
                                    " vs p=" + std::to_string(b.p()));
    }
}

} // namespace

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
    check_same_field(*this, rhs);
    if (!ctx_) return *this = rhs;
    if (!rhs.ctx_) return *this;
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
    return *this += -rhs;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
    check_same_field(*this, rhs);
    if (!ctx_) return *this; // zero stays zero
    if (!rhs.ctx_) {
        for (auto& c : coeffs_) c = 0;
        return *this;
    }
    std::vector<BigRat> raw(2 * ctx_->phi());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            raw[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    reduce_mod(raw, ctx_->modulus());
    coeffs_ = std::move(raw);
    return *this;
}

CyclotomicNumber CyclotomicNumber::invert() const {
    if (!ctx_ || is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
    Poly r0(ctx_->modulus().size());
    for (size_t i = 0; i < r0.size(); ++i) r0[i] = BigRat(ctx_->modulus()[i]);
    Poly r1 = coeffs_;
    trim(r1);
    Poly t0, t1{BigRat(1)};
    while (!is_zero_poly(r1)) {
        Poly r = r0;
        Poly q = divmod(r, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly t = sub(std::move(t0), mul(q, t1));
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    // Phi_p is irreducible over Q, so the gcd is a nonzero constant.
    if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: gcd not constant");
    for (auto& c : t0) c /= r0[0];
    return CyclotomicNumber(ctx_, std::move(t0));
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& rhs) const {
    if (is_zero() && rhs.is_zero()) return true;
    if (p() != rhs.p()) return false;
    return coeffs_ == rhs.coeffs_;
}

std::string CyclotomicNumber::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << coeffs_[i].str();
            continue;
        }
        if (coeffs_[i] == 1) {
        } else if (coeffs_[i] == -1) {
            os << "-";
        } else {
            os << coeffs_[i].str() << "*";
        }
        os << "e";
        if (i != 1) os << "^" << i;
    }
    return os.str();
}

CyclotomicNumber specialize(const LaurentPoly& P, const CycloContextPtr& ctx) {
    // Exponents reduce mod p first (eps^p = 1, so eps^-1 = eps^(p-1)); the
    // degree-(p-1) result then reduces mod Phi_p.
    const std::int64_t p = ctx->p();
    std::vector<BigRat> raw(static_cast<size_t>(p));
    for (const auto& [k, c] : P.terms()) {
        std::int64_t e = k % p;
        if (e < 0) e += p;
        raw[static_cast<size_t>(e)] += BigRat(c);
    }
    return CyclotomicNumber(ctx, std::move(raw));
}

CyclotomicNumber specialize(const LaurentPoly& P, std::int64_t p) {
    return specialize(P, make_cyclo_context(p));
}

} // namespace qfock
