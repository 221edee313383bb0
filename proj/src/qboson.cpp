#include "qfock/qboson.hpp"

#include <sstream>
#include <stdexcept>

#include "qfock/errors.hpp"
#include "qfock/q_numbers.hpp"

namespace qfock {

std::string to_string(BosonForm form) {
    return form == BosonForm::Res1 ? "res1" : "res2";
}

namespace {

void check_site(int site) {
    if (site != 1 && site != 2) throw UsageError("generator site must be 1 or 2");
}

void check_power(std::int64_t n) {
    if (n < 1) throw UsageError("generator power must be >= 1");
}

} // namespace

Generator Generator::a(int site, std::int64_t n) {
    check_site(site);
    check_power(n);
    return Generator{GenKind::A, site, n};
}

Generator Generator::a_divided(int site, std::int64_t n) {
    check_site(site);
    check_power(n);
    return Generator{GenKind::ADivided, site, n};
}

Generator Generator::a_plus(int site, std::int64_t n) {
    check_site(site);
    check_power(n);
    return Generator{GenKind::APlus, site, n};
}

Generator Generator::a_plus_divided(int site, std::int64_t n) {
    check_site(site);
    check_power(n);
    return Generator{GenKind::APlusDivided, site, n};
}

Generator Generator::k(int site) {
    check_site(site);
    return Generator{GenKind::K, site, 1};
}

Generator Generator::k_inv(int site) {
    check_site(site);
    return Generator{GenKind::KInv, site, 1};
}

std::string Generator::str() const {
    std::ostringstream os;
    os << "a" << site;
    switch (kind) {
        case GenKind::A: os << "^" << power; break;
        case GenKind::ADivided: os << "^(" << power << ")"; break;
        case GenKind::APlus: os << "+^" << power; break;
        case GenKind::APlusDivided: os << "+^(" << power << ")"; break;
        case GenKind::K: return "K" + std::to_string(site);
        case GenKind::KInv: return "K" + std::to_string(site) + "^-1";
    }
    return os.str();
}

namespace {

// Which powers are divided at a given site of a given form.
struct SiteConventions {
    bool divided_creators;
    bool divided_annihilators;
};

SiteConventions conventions(BosonForm form, int site) {
    if (form == BosonForm::Res1) return {true, false};
    return site == 1 ? SiteConventions{true, false} : SiteConventions{false, true};
}

void append_power(std::ostringstream& os, bool& first, const std::string& base,
                  std::int64_t n, bool divided) {
    if (n == 0) return;
    if (!first) os << " ";
    first = false;
    os << base << "^";
    if (divided) {
        os << "(" << n << ")";
    } else {
        os << n;
    }
}

} // namespace

std::string PBWMonomial::str() const {
    if (is_unit()) return "1";
    const SiteConventions c1 = conventions(form, 1);
    const SiteConventions c2 = conventions(form, 2);
    std::ostringstream os;
    bool first = true;
    append_power(os, first, "a1+", r1, c1.divided_creators);
    append_power(os, first, "a2+", r2, c2.divided_creators);
    append_power(os, first, "a1", s1, c1.divided_annihilators);
    append_power(os, first, "a2", s2, c2.divided_annihilators);
    append_power(os, first, "K1", t1, false);
    append_power(os, first, "K2", t2, false);
    return os.str();
}

BosonElement BosonElement::unit(BosonForm form) {
    BosonElement e(form);
    e.add(PBWMonomial{form}, LaurentPoly::one());
    return e;
}

BosonElement BosonElement::monomial(const PBWMonomial& m, LaurentPoly coeff) {
    BosonElement e(m.form);
    e.add(m, coeff);
    return e;
}

void BosonElement::add(const PBWMonomial& m, const LaurentPoly& c) {
    if (m.form != form_) throw std::invalid_argument("PBW monomial form mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BosonElement& BosonElement::operator+=(const BosonElement& rhs) {
    if (rhs.form_ != form_) throw std::invalid_argument("boson element form mismatch");
    for (const auto& [m, c] : rhs.terms_) add(m, c);
    return *this;
}

BosonElement& BosonElement::operator*=(const LaurentPoly& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

std::string BosonElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        const bool unit_mono = m.is_unit();
        if (c.is_one() && !unit_mono) {
            os << m.str();
            continue;
        }
        const bool needs_parens = c.terms().size() > 1;
        if (needs_parens) os << "(";
        os << c.str();
        if (needs_parens) os << ")";
        if (!unit_mono) os << " · " << m.str();
    }
    return os.str();
}

std::string NotIntegral::message() const {
    return "coordinate of " + monomial.str() + " is not a Laurent polynomial (remainder " +
           remainder + ")";
}

namespace {

// Single-site normal-form monomial: creator^cre annihilator^ann K^kpow,
// with divided-ness decided by the (form, site) conventions.
struct SiteMono {
    std::int64_t cre = 0, ann = 0, kpow = 0;
};

// (s - m)(s + m + 1) is always even.
std::int64_t reorder_qexp(std::int64_t n, std::int64_t m, std::int64_t s) {
    return n * (s + m) + ((s - m) * (s + m + 1)) / 2;
}

// Product of two single-site normal monomials, expanded back into normal
// form via the same-site reordering formulas. Calls sink(mono, coeff) per
// resulting term.
template <typename Sink>
void site_mul(const SiteConventions& conv, const SiteMono& x, const SiteMono& y, Sink&& sink) {
    // K^kpow commutes past y's creators/annihilators with a q-power.
    const LaurentPoly base = LaurentPoly::monomial(x.kpow * (y.cre - y.ann));
    const std::int64_t n = x.ann; // annihilator block meeting y's creators
    const std::int64_t m = y.cre;
    for (std::int64_t s = 0; s <= m; ++s) {
        const std::int64_t new_ann = n - m + s;
        if (new_ann < 0) {
            if (conv.divided_creators) {
                // Formula-1 terms that would need a negative annihilator
                // power carry an identically zero binomial.
                if (!q_binomial(n, m - s).is_zero()) {
                    throw std::logic_error("reordering: nonzero coefficient on negative power");
                }
            }
            // Divided annihilators of negative order are the zero element.
            continue;
        }
        LaurentPoly coeff = conv.divided_creators ? q_binomial(n, m - s)   // [n over m-s]
                                                  : q_binomial(m, s);      // [m over s]
        if (coeff.is_zero()) continue;
        coeff *= LaurentPoly::monomial(reorder_qexp(n, m, s));
        // Merge the two same-kind power blocks.
        if (conv.divided_creators) {
            coeff *= q_binomial(x.cre + s, x.cre); // a+^(x.cre) a+^(s)
        } else {
            coeff *= q_binomial(new_ann + y.ann, y.ann); // a^(new_ann) a^(y.ann)
        }
        if (coeff.is_zero()) continue;
        coeff *= base;
        sink(SiteMono{x.cre + s, new_ann + y.ann, x.kpow + y.kpow}, coeff);
    }
}

SiteMono site1_of(const PBWMonomial& m) { return {m.r1, m.s1, m.t1}; }
SiteMono site2_of(const PBWMonomial& m) { return {m.r2, m.s2, m.t2}; }

} // namespace

BosonElement multiply(const BosonElement& x, const BosonElement& y) {
    if (x.form() != y.form()) throw std::invalid_argument("cannot multiply across boson forms");
    const BosonForm form = x.form();
    const SiteConventions c1 = conventions(form, 1);
    const SiteConventions c2 = conventions(form, 2);
    BosonElement out(form);
    // Site-1 and site-2 operators commute, so the product expands per site.
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            const LaurentPoly c = cx * cy;
            site_mul(c1, site1_of(mx), site1_of(my), [&](const SiteMono& s1m, const LaurentPoly& c1v) {
                site_mul(c2, site2_of(mx), site2_of(my), [&](const SiteMono& s2m, const LaurentPoly& c2v) {
                    PBWMonomial m{form, s1m.cre, s2m.cre, s1m.ann, s2m.ann, s1m.kpow, s2m.kpow};
                    out.add(m, c * c1v * c2v);
                });
            });
        }
    }
    return out;
}

namespace {

struct GeneratorElement {
    BosonElement element;
    LaurentPoly denominator; // product of q-factorials still to divide out
};

GeneratorElement element_for(const Generator& g, BosonForm form) {
    const SiteConventions conv = conventions(form, g.site);
    PBWMonomial m{form};
    LaurentPoly coeff = LaurentPoly::one();
    LaurentPoly denom = LaurentPoly::one();
    auto cre = [&](std::int64_t n) { (g.site == 1 ? m.r1 : m.r2) = n; };
    auto ann = [&](std::int64_t n) { (g.site == 1 ? m.s1 : m.s2) = n; };
    auto kk = [&](std::int64_t n) { (g.site == 1 ? m.t1 : m.t2) = n; };
    switch (g.kind) {
        case GenKind::A:
            ann(g.power);
            if (conv.divided_annihilators) coeff = q_factorial(g.power); // a^n = [n]! a^(n)
            break;
        case GenKind::ADivided:
            ann(g.power);
            if (!conv.divided_annihilators) denom = q_factorial(g.power); // a^(n) = a^n / [n]!
            break;
        case GenKind::APlus:
            cre(g.power);
            if (conv.divided_creators) coeff = q_factorial(g.power);
            break;
        case GenKind::APlusDivided:
            cre(g.power);
            if (!conv.divided_creators) denom = q_factorial(g.power);
            break;
        case GenKind::K:
            kk(1);
            break;
        case GenKind::KInv:
            kk(-1);
            break;
    }
    return {BosonElement::monomial(m, coeff), denom};
}

} // namespace

BosonResult normal_order(std::span<const Generator> word, BosonForm form,
                         RewriteStrategy strategy) {
    BosonElement acc = BosonElement::unit(form);
    LaurentPoly denom = LaurentPoly::one();
    if (strategy == RewriteStrategy::LeftmostInnermost) {
        for (const Generator& g : word) {
            GeneratorElement ge = element_for(g, form);
            acc = multiply(acc, ge.element);
            denom *= ge.denominator;
        }
    } else {
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            GeneratorElement ge = element_for(*it, form);
            acc = multiply(ge.element, acc);
            denom *= ge.denominator;
        }
    }
    if (denom.is_one()) return acc;
    BosonElement out(form);
    for (const auto& [m, c] : acc.terms()) {
        LaurentDivision d = divide(c, denom);
        if (!d.exact) return NotIntegral{m, d.remainder_str};
        out.add(m, d.quotient);
    }
    return out;
}

BosonElement normal_order_integral(std::span<const Generator> word, BosonForm form) {
    BosonResult r = normal_order(word, form);
    if (auto* err = std::get_if<NotIntegral>(&r)) {
        throw std::logic_error("unexpected non-integral word: " + err->message());
    }
    return std::get<BosonElement>(std::move(r));
}

BosonResult convert_basis(const BosonElement& x, BosonForm target) {
    if (x.form() == target) return x;
    // Site 1 uses the same conventions in both forms; only the site-2
    // creator/annihilator divided-ness flips:
    //   res1 -> res2: coeff * [s2]! / [r2]!,  res2 -> res1: coeff * [r2]! / [s2]!.
    BosonElement out(target);
    for (const auto& [m, c] : x.terms()) {
        const std::int64_t mul_power = target == BosonForm::Res2 ? m.s2 : m.r2;
        const std::int64_t div_power = target == BosonForm::Res2 ? m.r2 : m.s2;
        LaurentPoly scaled = c * q_factorial(mul_power);
        LaurentDivision d = divide(scaled, q_factorial(div_power));
        if (!d.exact) return NotIntegral{m, d.remainder_str};
        PBWMonomial moved = m;
        moved.form = target;
        out.add(moved, d.quotient);
    }
    return out;
}

VacuumImage apply_to_vacuum(const BosonElement& x, std::int64_t x1, std::int64_t x2) {
    if (x1 < 0 || x2 < 0) throw std::invalid_argument("creator exponents must be nonnegative");
    PBWMonomial label{x.form()};
    label.r1 = x1;
    label.r2 = x2;
    const BosonElement prod = multiply(x, BosonElement::monomial(label));
    VacuumImage out;
    for (const auto& [m, c] : prod.terms()) {
        if (m.s1 != 0 || m.s2 != 0) continue; // annihilators kill the vacuum
        auto [it, inserted] = out.try_emplace({m.r1, m.r2}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

} // namespace qfock
