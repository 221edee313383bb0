#include "qfock/acceptance.hpp"

#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "qfock/cyclotomic.hpp"
#include "qfock/fock.hpp"
#include "qfock/parallel.hpp"
#include "qfock/q_numbers.hpp"
#include "qfock/qboson.hpp"
#include "qfock/rep.hpp"
#include "qfock/uq.hpp"

namespace qfock {

namespace {

using Cyc = CyclotomicNumber;

std::string first_nonempty(const std::vector<std::string>& items) {
    for (const auto& s : items) {
        if (!s.empty()) return s;
    }
    return {};
}

// ---------------------------------------------------------------- criterion 1

std::string root_binomial_law() {
    for (std::int64_t p : {3, 5, 7, 9}) {
        const auto ctx = make_cyclo_context(p);
        for (std::int64_t n = -50; n <= 50; ++n) {
            const Cyc lhs = specialize(q_binomial(n, p), ctx);
            const Cyc rhs = Cyc::from_rational(BigRat(digits(n, p).n1), ctx);
            if (!(lhs == rhs)) {
                return "specialized binomial != upper digit at n=" + std::to_string(n) +
                       ", p=" + std::to_string(p) + " (" + lhs.str() + " vs " + rhs.str() + ")";
            }
        }
    }
    return {};
}

// ---------------------------------------------------------------- criterion 2

std::string binomial_recurrence() {
    for (std::int64_t r = 0; r <= 25; ++r) {
        for (std::int64_t k = 0; k <= r; ++k) {
            const LaurentPoly lhs = q_binomial(r, k);
            const LaurentPoly rhs = LaurentPoly::monomial(-k) * q_binomial(r - 1, k) +
                                    LaurentPoly::monomial(r - k) * q_binomial(r - 1, k - 1);
            if (!(lhs == rhs)) {
                return "recurrence fails at r=" + std::to_string(r) + ", k=" + std::to_string(k);
            }
        }
    }
    return {};
}

// ---------------------------------------------------------------- criterion 3

// Brute-force single-site normal ordering over ordinary powers: words in
// 'a' (annihilator) and 'A' (creator), rewritten with aA -> q^2 Aa + 1 only.
// Deliberately independent of the closed-form reordering in the library.
using BruteElement = std::map<std::string, LaurentPoly>;

void brute_add(BruteElement& e, const std::string& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = e.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    }
}

BruteElement brute_normalize(const std::string& word) {
    const LaurentPoly q2 = LaurentPoly::monomial(2);
    BruteElement pending;
    brute_add(pending, word, LaurentPoly::one());
    BruteElement done;
    while (!pending.empty()) {
        const auto it = pending.begin();
        const std::string w = it->first;
        const LaurentPoly c = it->second;
        pending.erase(it);
        const auto pos = w.find("aA");
        if (pos == std::string::npos) {
            brute_add(done, w, c);
            continue;
        }
        std::string swapped = w;
        swapped[pos] = 'A';
        swapped[pos + 1] = 'a';
        brute_add(pending, swapped, c * q2);
        brute_add(pending, w.substr(0, pos) + w.substr(pos + 2), c);
    }
    return done;
}

std::map<std::pair<std::int64_t, std::int64_t>, LaurentPoly> brute_as_powers(const BruteElement& e) {
    std::map<std::pair<std::int64_t, std::int64_t>, LaurentPoly> out;
    for (const auto& [w, c] : e) {
        const auto creators = static_cast<std::int64_t>(std::count(w.begin(), w.end(), 'A'));
        const auto annihilators = static_cast<std::int64_t>(w.size()) - creators;
        out[{creators, annihilators}] += c;
    }
    return out;
}

std::string reordering_oracle() {
    for (std::int64_t n = 0; n <= 5; ++n) {
        for (std::int64_t m = 0; m <= 5; ++m) {
            const auto brute = brute_as_powers(
                brute_normalize(std::string(static_cast<size_t>(n), 'a') +
                                std::string(static_cast<size_t>(m), 'A')));

            // First closed form, scaled by [m]!:
            //   a^n a^+m = sum_s q^{n(s+m)} q^{(s-m)(s+m+1)/2} [n over m-s] ([m]!/[s]!) A^s a^{n-m+s}
            std::map<std::pair<std::int64_t, std::int64_t>, LaurentPoly> formula1;
            for (std::int64_t s = 0; s <= m; ++s) {
                const std::int64_t ann = n - m + s;
                const LaurentPoly binom = q_binomial(n, m - s);
                if (ann < 0) {
                    if (!binom.is_zero()) {
                        return "vanishing convention violated at n=" + std::to_string(n) +
                               ", m=" + std::to_string(m) + ", s=" + std::to_string(s);
                    }
                    continue;
                }
                if (binom.is_zero()) continue;
                auto scale = divide_exact(q_factorial(m), q_factorial(s));
                if (!scale) return "factorial ratio [m]!/[s]! not exact";
                LaurentPoly c = binom * *scale;
                c *= LaurentPoly::monomial(n * (s + m) + ((s - m) * (s + m + 1)) / 2);
                if (!c.is_zero()) formula1[{s, ann}] += c;
            }
            if (formula1 != brute) {
                return "first reordering formula disagrees with brute force at n=" +
                       std::to_string(n) + ", m=" + std::to_string(m);
            }

            // Second closed form, scaled by [n]!:
            //   a^n a^+m = sum_s q^{...} [m over s] ([n]!/[n-m+s]!) A^s a^{n-m+s}
            std::map<std::pair<std::int64_t, std::int64_t>, LaurentPoly> formula2;
            for (std::int64_t s = 0; s <= m; ++s) {
                const std::int64_t ann = n - m + s;
                if (ann < 0) continue; // negative divided order is the zero element
                auto scale = divide_exact(q_factorial(n), q_factorial(ann));
                if (!scale) return "factorial ratio [n]!/[n-m+s]! not exact";
                LaurentPoly c = q_binomial(m, s) * *scale;
                c *= LaurentPoly::monomial(n * (s + m) + ((s - m) * (s + m + 1)) / 2);
                if (!c.is_zero()) formula2[{s, ann}] += c;
            }
            if (formula2 != brute) {
                return "second reordering formula disagrees with brute force at n=" +
                       std::to_string(n) + ", m=" + std::to_string(m);
            }
        }
    }
    return {};
}

// ---------------------------------------------------------------- criterion 4

std::string defining_relations() {
    std::vector<std::string> details(2);
    parallel_for(2, [&](std::int64_t idx) {
        const int which = static_cast<int>(idx) + 1;
        const RelationReport rep = verify_defining_relations(which, 12);
        if (!rep.all_passed) {
            std::ostringstream os;
            os << "realization " << which << ": " << rep.counterexample->relation << " fails at "
               << rep.counterexample->label;
            details[static_cast<size_t>(idx)] = os.str();
        }
    });
    return first_nonempty(details);
}

// ---------------------------------------------------------------- criterion 5

std::string act_matches_oracle() {
    for (const std::int64_t p : {3, 5}) {
        const std::int64_t label_bound = 3 * p;
        const std::int64_t side = label_bound + 1;
        for (const int which : {1, 2}) {
            std::vector<UGenerator> gens;
            for (std::int64_t r = 1; r <= 2 * p + 1; ++r) {
                gens.push_back(UGenerator::e_divided(r));
                gens.push_back(UGenerator::f_divided(r));
            }
            gens.push_back(UGenerator::k());
            gens.push_back(UGenerator::k_inv());

            std::vector<std::string> details(static_cast<size_t>(side * side));
            parallel_for(side * side, [&](std::int64_t idx) {
                const FockLabel label{space_for(which), idx / side, idx % side};
                for (const UGenerator& g : gens) {
                    const GenericFockVector via_act = act(g, generic_basis(label), which);
                    const GenericFockVector via_oracle = act_oracle(g, label, which);
                    if (!(via_act == via_oracle)) {
                        details[static_cast<size_t>(idx)] =
                            "act != oracle for " + g.str() + " on " + label.str() +
                            " (p=" + std::to_string(p) + "): " + via_act.str() + " vs " +
                            via_oracle.str();
                        return;
                    }
                    if (which == 2) {
                        // the diagonal shift r2 - r1 is preserved by every generator
                        for (const auto& [out_label, c] : via_act.terms) {
                            if (out_label.r2 - out_label.r1 != label.r2 - label.r1) {
                                details[static_cast<size_t>(idx)] =
                                    "diagonal shift not preserved by " + g.str() + " on " +
                                    label.str();
                                return;
                            }
                        }
                    }
                }
            });
            const std::string failure = first_nonempty(details);
            if (!failure.empty()) return failure;
        }
    }
    return {};
}

// ---------------------------------------------------------------- criterion 6

SubspaceBasis span_of_indices(const std::vector<std::int64_t>& indices, const ModuleReport& rep) {
    SubspaceBasis span;
    for (const std::int64_t j : indices) {
        std::vector<Cyc> unit(static_cast<size_t>(rep.dim()));
        unit[static_cast<size_t>(j)] = Cyc::one(rep.ctx);
        span.insert(std::move(unit));
    }
    return span;
}

std::string weyl_structure() {
    for (const std::int64_t p : {3, 5}) {
        std::vector<std::string> details(static_cast<size_t>(6 * p));
        parallel_for(6 * p, [&](std::int64_t idx) {
            const std::int64_t m = idx + 1;
            std::ostringstream os;
            const ModuleReport rep = weyl_module(p, m);
            const Digits md = digits(m, p);
            const bool by_formula = m < p || md.n0 == p - 1;
            const bool by_closure = is_irreducible(rep);
            if (by_formula != by_closure) {
                os << "irreducibility criterion mismatch at p=" << p << ", m=" << m;
                details[static_cast<size_t>(idx)] = os.str();
                return;
            }
            const std::vector<std::int64_t> expected = weyl_maximal_submodule(p, m);
            const SubspaceBasis expected_span = span_of_indices(expected, rep);

            // Operationally: the union of all non-full single-vector closures
            // must be exactly the expected index span, and each non-full
            // closure must already sit inside it (unique maximal submodule).
            SubspaceBasis observed;
            for (std::int64_t j = 0; j < rep.dim(); ++j) {
                std::vector<Cyc> unit(static_cast<size_t>(rep.dim()));
                unit[static_cast<size_t>(j)] = Cyc::one(rep.ctx);
                const SubspaceBasis orbit = closure({unit}, rep);
                if (orbit.rank() == rep.dim()) continue;
                for (const auto& row : orbit.rows) {
                    if (!expected_span.contains(row)) {
                        os << "closure of v_" << j << " leaves the expected submodule (p=" << p
                           << ", m=" << m << ")";
                        details[static_cast<size_t>(idx)] = os.str();
                        return;
                    }
                    observed.insert(row);
                }
            }
            if (observed.rank() != expected_span.rank()) {
                os << "computed maximal submodule has rank " << observed.rank() << ", expected "
                   << expected_span.rank() << " (p=" << p << ", m=" << m << ")";
                details[static_cast<size_t>(idx)] = os.str();
                return;
            }
            if (rep.maximal_submodule != expected) {
                os << "report submodule indices differ from the digit description (p=" << p
                   << ", m=" << m << ")";
                details[static_cast<size_t>(idx)] = os.str();
                return;
            }
            const std::int64_t head_dim = (md.n0 + 1) * (md.n1 + 1);
            if (rep.dim() - static_cast<std::int64_t>(expected.size()) != head_dim) {
                os << "head dimension identity fails at p=" << p << ", m=" << m;
                details[static_cast<size_t>(idx)] = os.str();
                return;
            }
        });
        const std::string failure = first_nonempty(details);
        if (!failure.empty()) return failure;
    }
    return {};
}

// ---------------------------------------------------------------- criterion 7

std::string infinite_structure() {
    for (const std::int64_t p : {3, 5}) {
        const std::int64_t count = 4 * p + 1; // s in [-2p, 2p]
        std::vector<std::string> details(static_cast<size_t>(count));
        parallel_for(count, [&](std::int64_t idx) {
            const std::int64_t s = idx - 2 * p;
            std::ostringstream os;
            const ModuleReport rep = infinite_module(p, s, 6 * p);
            const std::int64_t abs_s = s < 0 ? -s : s;
            const Digits sd = digits(abs_s, p);
            auto fail = [&](const std::string& what) {
                os << what << " (p=" << p << ", s=" << s << ")";
                details[static_cast<size_t>(idx)] = os.str();
            };
            auto hw_indices = [&]() {
                std::vector<std::int64_t> out;
                for (const auto& hw : rep.highest_weight_vectors) out.push_back(hw.index);
                return out;
            };

            if (sd.n0 == 0) {
                if (!is_irreducible(rep)) return fail("expected irreducible");
                if (!rep.maximal_submodule.empty()) return fail("expected no submodule");
                if (hw_indices() != std::vector<std::int64_t>{0}) {
                    return fail("expected the single highest weight vector at index 0");
                }
                if (rep.weights[0].lambda != -(abs_s + 1)) {
                    return fail("highest weight differs from -(|s|+1)");
                }
                return;
            }

            if (is_irreducible(rep)) return fail("expected reducible");
            const std::int64_t head = s > 0 ? p - sd.n0 : 0; // head index of the submodule
            const std::int64_t quotient_head = s > 0 ? 0 : p - sd.n0;
            const std::int64_t sub_lambda =
                s > 0 ? -(p - sd.n0 + (sd.n1 + 1) * p + 1) : -(abs_s + 1);
            const std::int64_t quot_lambda =
                s > 0 ? -(s + 1) : -(p - sd.n0 + (1 + sd.n1) * p + 1);

            // Expected index set straight from the digit description.
            std::vector<std::int64_t> expected;
            for (std::int64_t j = 0; j <= rep.window; ++j) {
                const std::int64_t j0 = digits(j, p).n0;
                if ((s > 0 && j0 >= p - sd.n0) || (s < 0 && j0 < p - sd.n0)) {
                    expected.push_back(j);
                }
            }
            if (rep.maximal_submodule != expected) return fail("submodule indices unexpected");
            const std::vector<std::int64_t> expected_hw =
                s > 0 ? std::vector<std::int64_t>{0, head} : std::vector<std::int64_t>{0};
            if (hw_indices() != expected_hw) return fail("highest weight vector set unexpected");
            if (rep.weights[static_cast<size_t>(head)].lambda != sub_lambda) {
                return fail("submodule highest weight mismatch");
            }
            if (rep.weights[static_cast<size_t>(quotient_head)].lambda != quot_lambda) {
                return fail("quotient highest weight mismatch");
            }
            // The quotient head must be primitive mod the submodule: its e
            // and e^(p) images stay inside.
            const SubspaceBasis sub_span = span_of_indices(expected, rep);
            for (const GeneratorAction* a : {&rep.e_div(1), &rep.e_div(p)}) {
                for (const auto& [i, c] : a->matrix.cols[static_cast<size_t>(quotient_head)]) {
                    std::vector<Cyc> unit(static_cast<size_t>(rep.dim()));
                    unit[static_cast<size_t>(i)] = Cyc::one(rep.ctx);
                    if (!sub_span.contains(unit)) {
                        return fail("quotient head not primitive modulo the submodule");
                    }
                }
            }
            // Closure spot checks: the submodule head generates exactly the
            // submodule, a vector outside it generates the full window.
            std::vector<Cyc> head_seed(static_cast<size_t>(rep.dim()));
            head_seed[static_cast<size_t>(head)] = Cyc::one(rep.ctx);
            const SubspaceBasis head_orbit = closure({head_seed}, rep);
            if (head_orbit.rank() != static_cast<std::int64_t>(expected.size())) {
                return fail("submodule head orbit has unexpected rank");
            }
            for (const auto& row : head_orbit.rows) {
                if (!sub_span.contains(row)) return fail("submodule head orbit escapes");
            }
            std::vector<Cyc> outside_seed(static_cast<size_t>(rep.dim()));
            outside_seed[static_cast<size_t>(quotient_head)] = Cyc::one(rep.ctx);
            if (closure({outside_seed}, rep).rank() != rep.dim()) {
                return fail("vector outside the submodule fails to generate the window");
            }
        });
        const std::string failure = first_nonempty(details);
        if (!failure.empty()) return failure;
    }
    return {};
}

// ---------------------------------------------------------------- criterion 9

std::string negative_control() {
    const RelationReport r1 = verify_defining_relations(1, 2, RealizationVariant::NegatedF);
    if (r1.all_passed || !r1.counterexample) {
        return "sign-flipped realization 1 was not caught";
    }
    if (r1.counterexample->label != "f(0,1)") {
        return "realization 1 counterexample at " + r1.counterexample->label +
               ", expected f(0,1)";
    }
    const RelationReport r2 = verify_defining_relations(2, 2, RealizationVariant::NegatedF);
    if (r2.all_passed || !r2.counterexample) {
        return "sign-flipped realization 2 was not caught";
    }
    if (r2.counterexample->label != "g(0,0)") {
        return "realization 2 counterexample at " + r2.counterexample->label +
               ", expected g(0,0)";
    }
    return {};
}

template <typename Body>
CriterionResult run_criterion(int id, std::string name, double budget, Body&& body) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    result.id = id;
    result.name = std::move(name);
    result.budget_seconds = budget;
    try {
        result.detail = body();
    } catch (const std::exception& e) {
        result.detail = std::string("exception: ") + e.what();
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.passed = result.detail.empty();
    result.within_budget = result.seconds <= budget;
    return result;
}

} // namespace

ConfluenceResult check_confluence(std::uint64_t seed, std::int64_t count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> length_dist(1, 6);
    std::uniform_int_distribution<int> kind_dist(0, 5);
    std::uniform_int_distribution<int> site_dist(1, 2);
    std::uniform_int_distribution<std::int64_t> power_dist(1, 3);
    std::uniform_int_distribution<int> form_dist(0, 1);

    ConfluenceResult out;
    out.words = count;
    for (std::int64_t w = 0; w < count; ++w) {
        const BosonForm form = form_dist(rng) == 0 ? BosonForm::Res1 : BosonForm::Res2;
        std::vector<Generator> word;
        const int length = length_dist(rng);
        for (int i = 0; i < length; ++i) {
            const int site = site_dist(rng);
            const std::int64_t power = power_dist(rng);
            switch (kind_dist(rng)) {
                case 0: word.push_back(Generator::a(site, power)); break;
                case 1: word.push_back(Generator::a_divided(site, power)); break;
                case 2: word.push_back(Generator::a_plus(site, power)); break;
                case 3: word.push_back(Generator::a_plus_divided(site, power)); break;
                case 4: word.push_back(Generator::k(site)); break;
                default: word.push_back(Generator::k_inv(site)); break;
            }
        }
        const BosonResult left = normal_order(word, form, RewriteStrategy::LeftmostInnermost);
        const BosonResult right = normal_order(word, form, RewriteStrategy::RightmostInnermost);
        bool same = false;
        if (left.index() == right.index()) {
            if (const auto* le = std::get_if<BosonElement>(&left)) {
                same = *le == std::get<BosonElement>(right);
            } else {
                const auto& ln = std::get<NotIntegral>(left);
                const auto& rn = std::get<NotIntegral>(right);
                same = ln.monomial == rn.monomial && ln.remainder == rn.remainder;
            }
        }
        if (!same) {
            std::ostringstream os;
            os << "strategies disagree on word #" << w << " [";
            for (size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << word[i].str();
            os << "] in " << to_string(form);
            out.passed = false;
            out.detail = os.str();
            return out;
        }
    }
    return out;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
    std::vector<CriterionResult> results;
    results.push_back(run_criterion(1, "root-of-unity binomial law", 1.0, root_binomial_law));
    results.push_back(run_criterion(2, "Gaussian binomial recurrence", 1.0, binomial_recurrence));
    results.push_back(run_criterion(3, "reordering formulas vs brute force", 5.0, reordering_oracle));
    results.push_back(run_criterion(4, "defining relations under both realizations", 30.0,
                                    defining_relations));
    results.push_back(run_criterion(5, "closed-form vs oracle Fock actions", 30.0,
                                    act_matches_oracle));
    results.push_back(run_criterion(6, "Weyl module irreducibility and submodules", 60.0,
                                    weyl_structure));
    results.push_back(run_criterion(7, "infinite module structure", 60.0, infinite_structure));
    results.push_back(run_criterion(8, "normal-ordering confluence", 10.0, [seed] {
        const ConfluenceResult r = check_confluence(seed, 100);
        return r.passed ? std::string{} : r.detail;
    }));
    results.push_back(run_criterion(9, "negative control (sign-flipped realization)", 1.0,
                                    negative_control));
    return results;
}

} // namespace qfock
