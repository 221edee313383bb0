#include "qfock/uq.hpp"

#include <sstream>
#include <stdexcept>

#include "qfock/errors.hpp"

namespace qfock {

UGenerator UGenerator::e_divided(std::int64_t r) {
    if (r < 1) throw UsageError("divided power order must be >= 1");
    return UGenerator{UKind::EDivided, r};
}

UGenerator UGenerator::f_divided(std::int64_t r) {
    if (r < 1) throw UsageError("divided power order must be >= 1");
    return UGenerator{UKind::FDivided, r};
}

UGenerator UGenerator::kzero(std::int64_t p) {
    require_valid_p(p);
    return UGenerator{UKind::KZero, 1, p};
}

std::string UGenerator::str() const {
    switch (kind) {
        case UKind::EDivided: return r == 1 ? "e" : "e^(" + std::to_string(r) + ")";
        case UKind::FDivided: return r == 1 ? "f" : "f^(" + std::to_string(r) + ")";
        case UKind::K: return "K";
        case UKind::KInv: return "K^-1";
        case UKind::KZero: return "[K;0;" + std::to_string(p) + "]";
    }
    return "?";
}

Weight weight_digits(std::int64_t m, std::int64_t p) {
    return Weight{m, digits(m, p)};
}

namespace {

void check_which(int which) {
    if (which != 1 && which != 2) throw UsageError("realization selector must be 1 or 2");
}

} // namespace

namespace {

BosonElement realize_uncached(const UGenerator& g, int which, RealizationVariant variant) {
    const BosonForm form = which == 1 ? BosonForm::Res1 : BosonForm::Res2;
    std::vector<Generator> word;
    LaurentPoly scalar = LaurentPoly::one();
    const std::int64_t r = g.r;
    switch (g.kind) {
        case UKind::EDivided:
            if (which == 1) {
                // e^(r) = q^{-r(r-1)/2} K2^{-r} a1+^(r) a2^r
                scalar = LaurentPoly::monomial(-r * (r - 1) / 2);
                word.insert(word.end(), static_cast<size_t>(r), Generator::k_inv(2));
                word.push_back(Generator::a_plus_divided(1, r));
                word.push_back(Generator::a(2, r));
            } else {
                // e^(r) = q^{-r(r-1)} K1^{-r} K2^{-r} a1^r a2^(r)
                scalar = LaurentPoly::monomial(-r * (r - 1));
                word.insert(word.end(), static_cast<size_t>(r), Generator::k_inv(1));
                word.insert(word.end(), static_cast<size_t>(r), Generator::k_inv(2));
                word.push_back(Generator::a(1, r));
                word.push_back(Generator::a_divided(2, r));
            }
            break;
        case UKind::FDivided:
            if (which == 1) {
                // f^(r) = q^{-r(r-1)/2} K1^{-r} a2+^(r) a1^r
                scalar = LaurentPoly::monomial(-r * (r - 1) / 2);
                word.insert(word.end(), static_cast<size_t>(r), Generator::k_inv(1));
                word.push_back(Generator::a_plus_divided(2, r));
                word.push_back(Generator::a(1, r));
            } else {
                // f^(r) = (-1)^r a1+^(r) a2+^r
                scalar = LaurentPoly::integer(r % 2 == 0 ? 1 : -1);
                word.push_back(Generator::a_plus_divided(1, r));
                word.push_back(Generator::a_plus(2, r));
            }
            if (variant == RealizationVariant::NegatedF) scalar = -scalar;
            break;
        case UKind::K:
            if (which == 1) {
                word = {Generator::k(1), Generator::k_inv(2)};
            } else {
                scalar = LaurentPoly::monomial(-1); // K = q^-1 K1^-1 K2^-1
                word = {Generator::k_inv(1), Generator::k_inv(2)};
            }
            break;
        case UKind::KInv:
            if (which == 1) {
                word = {Generator::k_inv(1), Generator::k(2)};
            } else {
                scalar = LaurentPoly::monomial(1);
                word = {Generator::k(1), Generator::k(2)};
            }
            break;
        case UKind::KZero:
            throw UnsupportedOperation(
                "[K;0;p] has no boson realization (its defining product has denominators "
                "vanishing at the root of unity); it acts diagonally on weight vectors");
    }
    BosonElement out = normal_order_integral(word, form);
    out *= scalar;
    return out;
}

} // namespace

BosonElement realize(const UGenerator& g, int which, RealizationVariant variant) {
    check_which(which);
    if (g.kind == UKind::KZero) return realize_uncached(g, which, variant); // throws
    // Hot in the oracle suites; images are immutable, so memoize per thread.
    using Key = std::tuple<UKind, std::int64_t, int, RealizationVariant>;
    thread_local std::map<Key, BosonElement> cache;
    const Key key{g.kind, g.r, which, variant};
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    BosonElement value = realize_uncached(g, which, variant);
    cache.emplace(key, value);
    return value;
}

namespace {

using Vec = VacuumImage; // (r1, r2) -> LaurentPoly, over one Fock space

void add_scaled(Vec& dst, const Vec& src, const LaurentPoly& c) {
    for (const auto& [k, v] : src) {
        LaurentPoly add = v * c;
        if (add.is_zero()) continue;
        auto [it, inserted] = dst.try_emplace(k, add);
        if (!inserted) {
            it->second += add;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

Vec apply_op(const BosonElement& op, const Vec& v) {
    Vec out;
    for (const auto& [label, c] : v) {
        add_scaled(out, apply_to_vacuum(op, label.first, label.second), c);
    }
    return out;
}

Vec scale(Vec v, const LaurentPoly& c) {
    Vec out;
    add_scaled(out, v, c);
    return out;
}

Vec subtract(Vec a, const Vec& b) {
    add_scaled(a, b, LaurentPoly::integer(-1));
    return a;
}

std::string render(const Vec& v, char letter) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [label, c] : v) {
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) {
            const bool parens = c.terms().size() > 1;
            if (parens) os << "(";
            os << c.str();
            if (parens) os << ")";
            os << " · ";
        }
        os << letter << "(" << label.first << "," << label.second << ")";
    }
    return os.str();
}

std::string label_str(char letter, std::int64_t x1, std::int64_t x2) {
    std::ostringstream os;
    os << letter << "(" << x1 << "," << x2 << ")";
    return os.str();
}

} // namespace

RelationReport verify_defining_relations(int which, std::int64_t bound,
                                         RealizationVariant variant) {
    check_which(which);
    if (bound < 1) throw UsageError("relation check bound must be >= 1");

    const char letter = which == 1 ? 'f' : 'g';
    const BosonElement E = realize(UGenerator::e(), which, variant);
    const BosonElement F = realize(UGenerator::f(), which, variant);
    const BosonElement K = realize(UGenerator::k(), which, variant);
    const BosonElement Kinv = realize(UGenerator::k_inv(), which, variant);
    const LaurentPoly q2 = LaurentPoly::monomial(2);
    const LaurentPoly qm2 = LaurentPoly::monomial(-2);
    const LaurentPoly qdiff = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);

    RelationReport report;
    report.which = which;
    report.bound = bound;

    auto record = [&](const std::string& relation, auto&& body) {
        RelationCheck check{relation};
        for (std::int64_t x1 = 0; x1 <= bound; ++x1) {
            for (std::int64_t x2 = 0; x2 <= bound; ++x2) {
                Vec v{{{x1, x2}, LaurentPoly::one()}};
                auto [lhs, rhs] = body(v);
                ++check.cases;
                if (lhs != rhs) {
                    check.passed = false;
                    report.all_passed = false;
                    if (!report.counterexample) {
                        report.counterexample = RelationCounterexample{
                            relation, label_str(letter, x1, x2), render(lhs, letter),
                            render(rhs, letter)};
                    }
                }
            }
        }
        report.checks.push_back(std::move(check));
    };

    record("K K^-1 = 1", [&](const Vec& v) { return std::pair(apply_op(K, apply_op(Kinv, v)), v); });
    record("K^-1 K = 1", [&](const Vec& v) { return std::pair(apply_op(Kinv, apply_op(K, v)), v); });
    record("K e K^-1 = q^2 e", [&](const Vec& v) {
        return std::pair(apply_op(K, apply_op(E, apply_op(Kinv, v))), scale(apply_op(E, v), q2));
    });
    record("K f K^-1 = q^-2 f", [&](const Vec& v) {
        return std::pair(apply_op(K, apply_op(F, apply_op(Kinv, v))), scale(apply_op(F, v), qm2));
    });
    record("(q - q^-1)[e,f] = K - K^-1", [&](const Vec& v) {
        Vec comm = subtract(apply_op(E, apply_op(F, v)), apply_op(F, apply_op(E, v)));
        return std::pair(scale(std::move(comm), qdiff), subtract(apply_op(K, v), apply_op(Kinv, v)));
    });

    // Divided-power consistency: e^(r) [r]! = e^r (and the f-counterpart).
    for (int gen = 0; gen < 2; ++gen) {
        const bool is_e = gen == 0;
        const BosonElement& single = is_e ? E : F;
        std::vector<BosonElement> divided;
        std::vector<LaurentPoly> factorials;
        for (std::int64_t r = 1; r <= bound; ++r) {
            divided.push_back(realize(
                is_e ? UGenerator::e_divided(r) : UGenerator::f_divided(r), which, variant));
            factorials.push_back(q_factorial(r));
        }
        RelationCheck check{is_e ? "e^(r) [r]! = e^r, r <= bound" : "f^(r) [r]! = f^r, r <= bound"};
        for (std::int64_t x1 = 0; x1 <= bound; ++x1) {
            for (std::int64_t x2 = 0; x2 <= bound; ++x2) {
                Vec power{{{x1, x2}, LaurentPoly::one()}};
                for (std::int64_t r = 1; r <= bound; ++r) {
                    power = apply_op(single, power);
                    Vec lhs = scale(apply_op(divided[static_cast<size_t>(r - 1)],
                                          Vec{{{x1, x2}, LaurentPoly::one()}}),
                                    factorials[static_cast<size_t>(r - 1)]);
                    ++check.cases;
                    if (lhs != power) {
                        check.passed = false;
                        report.all_passed = false;
                        if (!report.counterexample) {
                            report.counterexample = RelationCounterexample{
                                check.relation + " (r=" + std::to_string(r) + ")",
                                label_str(letter, x1, x2), render(lhs, letter),
                                render(power, letter)};
                        }
                    }
                }
            }
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

} // namespace qfock
