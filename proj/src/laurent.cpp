#include "qfock/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace qfock {

LaurentPoly LaurentPoly::integer(BigInt n) {
    return monomial(0, std::move(n));
}

LaurentPoly LaurentPoly::monomial(Exp k, BigInt c) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(k, std::move(c));
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

BigInt LaurentPoly::coeff(Exp k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly::Exp LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

LaurentPoly::Exp LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(-k, c);
    return out;
}

LaurentPoly LaurentPoly::pow(std::uint32_t n) const {
    LaurentPoly acc = one();
    for (std::uint32_t i = 0; i < n; ++i) acc *= *this;
    return acc;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

void LaurentPoly::add_term(Exp k, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    // Dense convolution; exponent ranges in this library stay small while
    // coefficients grow, so the dense window is the cheap part.
    const Exp alo = min_exp(), ahi = max_exp();
    const Exp blo = rhs.min_exp(), bhi = rhs.max_exp();
    std::vector<BigInt> a(static_cast<size_t>(ahi - alo + 1));
    std::vector<BigInt> b(static_cast<size_t>(bhi - blo + 1));
    for (const auto& [k, c] : terms_) a[static_cast<size_t>(k - alo)] = c;
    for (const auto& [k, c] : rhs.terms_) b[static_cast<size_t>(k - blo)] = c;
    std::vector<BigInt> prod(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    terms_.clear();
    for (size_t i = 0; i < prod.size(); ++i) {
        if (prod[i] != 0) terms_.emplace(alo + blo + static_cast<Exp>(i), std::move(prod[i]));
    }
    return *this;
}

namespace {

void append_term(std::ostringstream& os, bool first, LaurentPoly::Exp k, const BigInt& c) {
    if (!first) os << " + ";
    if (k == 0) {
        os << c.str();
        return;
    }
    if (c == 1) {
        // coefficient elided
    } else if (c == -1) {
        os << "-";
    } else {
        os << c.str() << "*";
    }
    os << "q";
    if (k != 1) os << "^" << k;
}

std::string rational_poly_str(const std::vector<BigRat>& coeffs, LaurentPoly::Exp offset) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        const LaurentPoly::Exp k = offset + static_cast<LaurentPoly::Exp>(i);
        if (k == 0) {
            os << coeffs[i].str();
            continue;
        }
        if (coeffs[i] == 1) {
        } else if (coeffs[i] == -1) {
            os << "-";
        } else {
            os << coeffs[i].str() << "*";
        }
        os << "q";
        if (k != 1) os << "^" << k;
    }
    return first ? "0" : os.str();
}

} // namespace

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        append_term(os, first, it->first, it->second);
        first = false;
    }
    return os.str();
}

namespace {

// Fast path for divisors with unit leading coefficient (every q-integer and
// q-factorial is monic): long division stays in Z.
LaurentDivision divide_by_monic(const LaurentPoly& numerator, const LaurentPoly& denominator,
                                bool negate_lead) {
    LaurentDivision out;
    const LaurentPoly::Exp noff = numerator.min_exp();
    const LaurentPoly::Exp doff = denominator.min_exp();
    std::vector<BigInt> num(static_cast<size_t>(numerator.max_exp() - noff + 1));
    std::vector<BigInt> den(static_cast<size_t>(denominator.max_exp() - doff + 1));
    for (const auto& [k, c] : numerator.terms()) num[static_cast<size_t>(k - noff)] = c;
    for (const auto& [k, c] : denominator.terms()) den[static_cast<size_t>(k - doff)] = c;
    if (num.size() < den.size()) {
        out.exact = false;
        out.remainder_str = numerator.str();
        return out;
    }
    std::vector<BigInt> quot(num.size() - den.size() + 1);
    for (size_t i = quot.size(); i-- > 0;) {
        BigInt c = num[i + den.size() - 1];
        if (c == 0) continue;
        if (negate_lead) c = -c;
        quot[i] = c;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const auto& r : num) {
        if (r != 0) {
            LaurentPoly rem;
            for (size_t i = 0; i < num.size(); ++i) {
                rem.add_term(noff + static_cast<LaurentPoly::Exp>(i), num[i]);
            }
            out.exact = false;
            out.remainder_str = rem.str();
            return out;
        }
    }
    LaurentPoly q;
    for (size_t i = 0; i < quot.size(); ++i) {
        q.add_term(noff - doff + static_cast<LaurentPoly::Exp>(i), quot[i]);
    }
    out.exact = true;
    out.quotient = std::move(q);
    return out;
}

} // namespace

LaurentDivision divide(const LaurentPoly& numerator, const LaurentPoly& denominator) {
    if (denominator.is_zero()) throw std::invalid_argument("division by zero polynomial");
    LaurentDivision out;
    if (numerator.is_zero()) {
        out.exact = true;
        return out;
    }
    const BigInt& lead = denominator.terms().rbegin()->second;
    if (lead == 1 || lead == -1) return divide_by_monic(numerator, denominator, lead == -1);

    // Shift both operands to ordinary polynomials; the quotient picks up the
    // exponent offset at the end. Long division runs over Q so that a
    // non-exact division still yields a reportable remainder.
    const LaurentPoly::Exp noff = numerator.min_exp();
    const LaurentPoly::Exp doff = denominator.min_exp();
    std::vector<BigRat> num(static_cast<size_t>(numerator.max_exp() - noff + 1));
    std::vector<BigRat> den(static_cast<size_t>(denominator.max_exp() - doff + 1));
    for (const auto& [k, c] : numerator.terms()) num[static_cast<size_t>(k - noff)] = BigRat(c);
    for (const auto& [k, c] : denominator.terms()) den[static_cast<size_t>(k - doff)] = BigRat(c);

    if (num.size() < den.size()) {
        out.exact = false;
        out.remainder_str = rational_poly_str(num, noff);
        return out;
    }

    const BigRat den_lead = den.back();
    std::vector<BigRat> quot(num.size() - den.size() + 1);
    for (size_t i = quot.size(); i-- > 0;) {
        BigRat c = num[i + den.size() - 1] / den_lead;
        if (c == 0) continue;
        quot[i] = c;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }

    for (const auto& r : num) {
        if (r != 0) {
            out.exact = false;
            out.remainder_str = rational_poly_str(num, noff);
            return out;
        }
    }
    LaurentPoly q;
    for (size_t i = 0; i < quot.size(); ++i) {
        if (quot[i] == 0) continue;
        if (boost::multiprecision::denominator(quot[i]) != 1) {
            // Divides as a polynomial over Q but not over Z: not exact here.
            out.exact = false;
            out.remainder_str = "0 (quotient not integral: " + rational_poly_str(quot, noff - doff) + ")";
            return out;
        }
        q.add_term(noff - doff + static_cast<LaurentPoly::Exp>(i),
                   BigInt(boost::multiprecision::numerator(quot[i])));
    }
    out.exact = true;
    out.quotient = std::move(q);
    return out;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& numerator,
                                        const LaurentPoly& denominator) {
    LaurentDivision d = divide(numerator, denominator);
    if (!d.exact) return std::nullopt;
    return std::move(d.quotient);
}

} // namespace qfock
