#include "qfock/json_report.hpp"

#include <sstream>

#include "qfock/acceptance.hpp"
#include "qfock/errors.hpp"
#include "qfock/fock.hpp"
#include "qfock/q_numbers.hpp"
#include "qfock/rep.hpp"
#include "qfock/uq.hpp"

namespace qfock {

namespace {

Json envelope(Json command) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = std::move(command);
    return doc;
}

Json weight_json(const Weight& w) {
    Json j;
    j["lambda"] = w.lambda;
    j["lambda0"] = w.d.n0;
    j["lambda1"] = w.d.n1;
    return j;
}

Json matrix_json(const SparseMatrix& m) {
    Json out = Json::array();
    for (std::int64_t j = 0; j < m.dim; ++j) {
        for (const auto& [i, c] : m.cols[static_cast<size_t>(j)]) {
            out.push_back(Json::array({j, i, c.str()}));
        }
    }
    return out;
}

Json diagonal_json(const std::vector<CyclotomicNumber>& diag) {
    Json out = Json::array();
    for (size_t j = 0; j < diag.size(); ++j) {
        out.push_back(Json::array({j, j, diag[j].str()}));
    }
    return out;
}

Json module_payload(const ModuleReport& rep) {
    Json p;
    p["kind"] = rep.kind_str();
    p["p"] = rep.p;
    if (rep.kind == ModuleReport::Kind::Weyl) {
        p["m"] = rep.m;
    } else {
        p["s"] = rep.s;
        p["window"] = rep.window;
    }
    p["dim"] = rep.dim();
    Json basis = Json::array();
    for (const auto& label : rep.basis) basis.push_back(label.str());
    p["basis"] = std::move(basis);
    Json weights = Json::array();
    for (const auto& w : rep.weights) weights.push_back(weight_json(w));
    p["weights"] = std::move(weights);
    p["irreducible"] = is_irreducible(rep);
    p["maximal_submodule"] = rep.maximal_submodule;
    if (rep.kind == ModuleReport::Kind::Infinite) p["boundary_flags"] = rep.boundary_flags;
    Json hw = Json::array();
    for (const auto& v : rep.highest_weight_vectors) {
        Json h;
        h["index"] = v.index;
        h["label"] = rep.basis[static_cast<size_t>(v.index)].str();
        h["lambda"] = v.weight.lambda;
        hw.push_back(std::move(h));
    }
    p["highest_weight_vectors"] = std::move(hw);
    Json cls = Json::array();
    for (const auto& c : rep.classifications) {
        Json j;
        j["object"] = c.object;
        j["lambda"] = c.lambda;
        if (c.hw_index) j["hw_index"] = *c.hw_index;
        if (c.dim) j["dim"] = *c.dim;
        cls.push_back(std::move(j));
    }
    p["classifications"] = std::move(cls);
    Json actions;
    actions["e"] = matrix_json(rep.e_div(1).matrix);
    actions["f"] = matrix_json(rep.f_div(1).matrix);
    actions["e^(p)"] = matrix_json(rep.e_div(rep.p).matrix);
    actions["f^(p)"] = matrix_json(rep.f_div(rep.p).matrix);
    actions["K"] = diagonal_json(rep.k_diagonal);
    p["actions"] = std::move(actions);
    return p;
}

Json classification_realization_json(const ClassifyRealization& r, std::int64_t p) {
    Json j;
    j["kind"] = r.kind;
    if (r.m) {
        j["construction"] = "weyl(p=" + std::to_string(p) + ", m=" + std::to_string(*r.m) + ")";
        j["m"] = *r.m;
    }
    if (r.s) {
        j["construction"] = "infinite(p=" + std::to_string(p) + ", s=" + std::to_string(*r.s) + ")";
        j["s"] = *r.s;
        j["suggested_window"] = 6 * p;
    }
    j["description"] = r.description;
    return j;
}

} // namespace

Json qbinom_document(std::int64_t p, std::int64_t n, std::int64_t m, bool at_root) {
    require_valid_p(p);
    Json cmd;
    cmd["subcommand"] = "qbinom";
    cmd["p"] = p;
    cmd["n"] = n;
    cmd["m"] = m;
    cmd["at_root"] = at_root;
    Json doc = envelope(std::move(cmd));
    Json payload;
    std::ostringstream symbol;
    symbol << "[" << n << " over " << m << "]_" << (at_root ? "eps" : "q");
    payload["symbol"] = symbol.str();
    if (at_root) {
        payload["value"] = specialize(q_binomial(n, m), p).str();
    } else {
        payload["value"] = q_binomial(n, m).str();
    }
    doc["payload"] = std::move(payload);
    doc["diagnostics"] = Json::object();
    return doc;
}

Json weyl_document(std::int64_t p, std::int64_t m) {
    Json cmd;
    cmd["subcommand"] = "weyl";
    cmd["p"] = p;
    cmd["m"] = m;
    Json doc = envelope(std::move(cmd));
    doc["payload"] = module_payload(weyl_module(p, m));
    Json diag;
    diag["closed_form_cross_check"] = "passed at construction";
    doc["diagnostics"] = std::move(diag);
    return doc;
}

Json infmod_document(std::int64_t p, std::int64_t s, std::int64_t window) {
    Json cmd;
    cmd["subcommand"] = "infmod";
    cmd["p"] = p;
    cmd["s"] = s;
    cmd["window"] = window;
    Json doc = envelope(std::move(cmd));
    doc["payload"] = module_payload(infinite_module(p, s, window));
    Json diag;
    diag["closed_form_cross_check"] = "passed at construction";
    diag["window_note"] =
        "actions are truncated at the window; boundary_flags lists basis indices whose f-type "
        "image leaves it";
    doc["diagnostics"] = std::move(diag);
    return doc;
}

Json classify_document(std::int64_t p, std::int64_t lambda) {
    Json cmd;
    cmd["subcommand"] = "classify";
    cmd["p"] = p;
    cmd["lambda"] = lambda;
    Json doc = envelope(std::move(cmd));
    const ClassifyRecipe recipe = classify(p, lambda);
    Json payload;
    payload["lambda"] = recipe.lambda;
    payload["p"] = recipe.p;
    payload["primary"] = classification_realization_json(recipe.primary, p);
    Json alternates = Json::array();
    for (const auto& alt : recipe.alternates) {
        alternates.push_back(classification_realization_json(alt, p));
    }
    payload["alternates"] = std::move(alternates);
    if (recipe.finite_dim) payload["dim"] = *recipe.finite_dim;
    doc["payload"] = std::move(payload);
    doc["diagnostics"] = Json::object();
    return doc;
}

namespace {

// verify: relation suite + act-vs-oracle suite + specialization consistency
// + a seeded confluence sample.
Json verify_payload(std::int64_t p, int which, std::int64_t bound, std::uint64_t seed,
                    Json& counterexample, bool& all_passed) {
    Json payload;
    payload["which"] = which;
    payload["bound"] = bound;
    payload["p"] = p;

    const RelationReport rel = verify_defining_relations(which, bound);
    Json relations = Json::array();
    for (const auto& check : rel.checks) {
        Json j;
        j["name"] = check.relation;
        j["cases"] = check.cases;
        j["passed"] = check.passed;
        relations.push_back(std::move(j));
    }
    payload["relations"] = std::move(relations);
    if (!rel.all_passed) {
        all_passed = false;
        if (counterexample.is_null()) {
            counterexample["suite"] = "relations";
            counterexample["relation"] = rel.counterexample->relation;
            counterexample["basis"] = rel.counterexample->label;
            counterexample["lhs"] = rel.counterexample->lhs;
            counterexample["rhs"] = rel.counterexample->rhs;
        }
    }

    std::vector<UGenerator> gens;
    for (std::int64_t r = 1; r <= bound; ++r) {
        gens.push_back(UGenerator::e_divided(r));
        gens.push_back(UGenerator::f_divided(r));
    }
    gens.push_back(UGenerator::k());
    gens.push_back(UGenerator::k_inv());
    std::int64_t oracle_cases = 0;
    bool oracle_ok = true;
    for (std::int64_t r1 = 0; r1 <= bound && oracle_ok; ++r1) {
        for (std::int64_t r2 = 0; r2 <= bound && oracle_ok; ++r2) {
            const FockLabel label{space_for(which), r1, r2};
            for (const UGenerator& g : gens) {
                const GenericFockVector lhs = act(g, generic_basis(label), which);
                const GenericFockVector rhs = act_oracle(g, label, which);
                ++oracle_cases;
                if (!(lhs == rhs)) {
                    oracle_ok = false;
                    all_passed = false;
                    if (counterexample.is_null()) {
                        counterexample["suite"] = "oracle";
                        counterexample["generator"] = g.str();
                        counterexample["basis"] = label.str();
                        counterexample["lhs"] = lhs.str();
                        counterexample["rhs"] = rhs.str();
                    }
                    break;
                }
            }
        }
    }
    Json oracle;
    oracle["generators"] = static_cast<std::int64_t>(gens.size());
    oracle["cases"] = oracle_cases;
    oracle["passed"] = oracle_ok;
    payload["oracle"] = std::move(oracle);

    // Specializing then acting must agree with acting then specializing.
    const auto ctx = make_cyclo_context(p);
    std::vector<UGenerator> spec_gens{UGenerator::e(), UGenerator::f(),
                                      UGenerator::e_divided(p), UGenerator::f_divided(p),
                                      UGenerator::k(), UGenerator::kzero(p)};
    std::int64_t spec_cases = 0;
    bool spec_ok = true;
    for (std::int64_t r1 = 0; r1 <= bound && spec_ok; ++r1) {
        for (std::int64_t r2 = 0; r2 <= bound && spec_ok; ++r2) {
            const FockLabel label{space_for(which), r1, r2};
            for (const UGenerator& g : spec_gens) {
                const RootFockVector lhs = act(g, root_basis(label, ctx), which);
                // dual route: generic action (boson oracle where available),
                // specialized afterwards
                const GenericFockVector generic_image =
                    g.kind == UKind::KZero ? act(g, generic_basis(label), which)
                                           : act_oracle(g, label, which);
                const RootFockVector rhs = specialize_vector(generic_image, ctx);
                ++spec_cases;
                if (!(lhs == rhs)) {
                    spec_ok = false;
                    all_passed = false;
                    if (counterexample.is_null()) {
                        counterexample["suite"] = "specialization";
                        counterexample["generator"] = g.str();
                        counterexample["basis"] = label.str();
                        counterexample["lhs"] = lhs.str();
                        counterexample["rhs"] = rhs.str();
                    }
                    break;
                }
            }
        }
    }
    Json specialization;
    specialization["cases"] = spec_cases;
    specialization["passed"] = spec_ok;
    payload["specialization"] = std::move(specialization);

    const ConfluenceResult conf = check_confluence(seed, 25);
    Json confluence;
    confluence["words"] = conf.words;
    confluence["passed"] = conf.passed;
    payload["confluence"] = std::move(confluence);
    if (!conf.passed) {
        all_passed = false;
        if (counterexample.is_null()) {
            counterexample["suite"] = "confluence";
            counterexample["detail"] = conf.detail;
        }
    }
    return payload;
}

} // namespace

Json verify_document(std::int64_t p, int which, std::int64_t bound, std::uint64_t seed) {
    require_valid_p(p);
    if (bound < 1) throw UsageError("--bound must be >= 1");
    Json cmd;
    cmd["subcommand"] = "verify";
    cmd["p"] = p;
    cmd["which"] = which;
    cmd["bound"] = bound;
    cmd["seed"] = seed;
    Json doc = envelope(std::move(cmd));
    Json counterexample;
    bool all_passed = true;
    Json payload = verify_payload(p, which, bound, seed, counterexample, all_passed);
    payload["all_passed"] = all_passed;
    payload["counterexample"] = counterexample.is_null() ? Json() : counterexample;
    doc["payload"] = std::move(payload);
    doc["diagnostics"] = Json::object();
    return doc;
}

Json selftest_document(std::uint64_t seed) {
    Json cmd;
    cmd["subcommand"] = "selftest";
    cmd["seed"] = seed;
    Json doc = envelope(std::move(cmd));
    const std::vector<CriterionResult> results = run_acceptance(seed);
    Json criteria = Json::array();
    bool all = true;
    for (const auto& r : results) {
        Json j;
        j["id"] = r.id;
        j["name"] = r.name;
        j["passed"] = r.passed;
        if (!r.detail.empty()) j["detail"] = r.detail;
        criteria.push_back(std::move(j));
        all = all && r.passed;
    }
    Json payload;
    payload["criteria"] = std::move(criteria);
    payload["all_passed"] = all;
    doc["payload"] = std::move(payload);
    doc["diagnostics"] = Json::object();
    return doc;
}

namespace {

std::string weights_line(const Json& payload) {
    std::ostringstream os;
    bool first = true;
    for (const auto& w : payload["weights"]) {
        os << (first ? "" : ", ") << w["lambda"].get<std::int64_t>();
        first = false;
    }
    return os.str();
}

std::string classification_line(const Json& c) {
    std::ostringstream os;
    os << c["object"].get<std::string>() << " realizes the irreducible highest weight module, "
       << "lambda=" << c["lambda"].get<std::int64_t>();
    if (c.contains("dim")) os << ", dim " << c["dim"].get<std::int64_t>();
    if (c.contains("hw_index")) os << " (hw vector index " << c["hw_index"].get<std::int64_t>() << ")";
    return os.str();
}

std::string module_text(const Json& doc) {
    const Json& p = doc["payload"];
    std::ostringstream os;
    os << p["kind"].get<std::string>() << ", p=" << p["p"].get<std::int64_t>() << "\n";
    os << "dim: " << p["dim"].get<std::int64_t>() << "\n";
    os << "weights: " << weights_line(p) << "\n";
    os << "irreducible: " << (p["irreducible"].get<bool>() ? "true" : "false") << "\n";
    os << "maximal submodule indices: " << p["maximal_submodule"].dump() << "\n";
    if (p.contains("boundary_flags")) {
        os << "boundary flags: " << p["boundary_flags"].dump() << "\n";
    }
    os << "highest weight vectors:";
    for (const auto& h : p["highest_weight_vectors"]) {
        os << " " << h["label"].get<std::string>() << " (lambda="
           << h["lambda"].get<std::int64_t>() << ")";
    }
    os << "\n";
    for (const auto& c : p["classifications"]) {
        os << "classification: " << classification_line(c) << "\n";
    }
    return os.str();
}

std::string classify_text(const Json& doc) {
    const Json& p = doc["payload"];
    std::ostringstream os;
    os << "classify lambda=" << p["lambda"].get<std::int64_t>() << ", p="
       << p["p"].get<std::int64_t>() << "\n";
    auto line = [&](const Json& r) {
        std::ostringstream o;
        o << r["description"].get<std::string>() << " [" << r["construction"].get<std::string>()
          << "]";
        return o.str();
    };
    os << "primary: " << line(p["primary"]) << "\n";
    for (const auto& alt : p["alternates"]) os << "alternate: " << line(alt) << "\n";
    if (p.contains("dim")) os << "dim: " << p["dim"].get<std::int64_t>() << "\n";
    return os.str();
}

std::string verify_text(const Json& doc) {
    const Json& p = doc["payload"];
    std::ostringstream os;
    os << "verify: realization " << p["which"].get<int>() << ", bound "
       << p["bound"].get<std::int64_t>() << ", p=" << p["p"].get<std::int64_t>() << "\n";
    for (const auto& r : p["relations"]) {
        os << (r["passed"].get<bool>() ? "[PASS] " : "[FAIL] ") << r["name"].get<std::string>()
           << " (" << r["cases"].get<std::int64_t>() << " cases)\n";
    }
    os << (p["oracle"]["passed"].get<bool>() ? "[PASS] " : "[FAIL] ")
       << "closed-form action vs boson oracle (" << p["oracle"]["cases"].get<std::int64_t>()
       << " cases)\n";
    os << (p["specialization"]["passed"].get<bool>() ? "[PASS] " : "[FAIL] ")
       << "specialization consistency (" << p["specialization"]["cases"].get<std::int64_t>()
       << " cases)\n";
    os << (p["confluence"]["passed"].get<bool>() ? "[PASS] " : "[FAIL] ")
       << "normal-ordering confluence sample (" << p["confluence"]["words"].get<std::int64_t>()
       << " words)\n";
    if (!p["counterexample"].is_null()) {
        os << "counterexample: " << p["counterexample"].dump() << "\n";
    }
    os << (p["all_passed"].get<bool>() ? "all checks passed" : "verification FAILED") << "\n";
    return os.str();
}

std::string selftest_text(const Json& doc) {
    const Json& p = doc["payload"];
    std::ostringstream os;
    for (const auto& c : p["criteria"]) {
        os << (c["passed"].get<bool>() ? "[PASS]" : "[FAIL]") << " criterion "
           << c["id"].get<int>() << ": " << c["name"].get<std::string>();
        if (c.contains("detail")) os << " -- " << c["detail"].get<std::string>();
        os << "\n";
    }
    os << (p["all_passed"].get<bool>() ? "all criteria passed" : "selftest FAILED") << "\n";
    return os.str();
}

} // namespace

std::string render_text(const Json& doc) {
    const std::string sub = doc["command"]["subcommand"].get<std::string>();
    if (sub == "qbinom") return doc["payload"]["value"].get<std::string>() + "\n";
    if (sub == "weyl" || sub == "infmod") return module_text(doc);
    if (sub == "classify") return classify_text(doc);
    if (sub == "verify") return verify_text(doc);
    if (sub == "selftest") return selftest_text(doc);
    return doc.dump(2) + "\n";
}

bool document_passed(const Json& doc) {
    const std::string sub = doc["command"]["subcommand"].get<std::string>();
    if (sub == "verify" || sub == "selftest") {
        return doc["payload"]["all_passed"].get<bool>();
    }
    return true;
}

} // namespace qfock
