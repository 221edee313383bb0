#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qfock/errors.hpp"
#include "qfock/json_report.hpp"
#include "qfock/q_numbers.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 20240901;

struct Options {
    std::int64_t p = 0;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t s = 0;
    std::int64_t lambda = 0;
    std::int64_t window = 0;
    std::int64_t bound = 5;
    int which = 1;
    bool at_root = false;
    std::string format = "text";
    std::uint64_t seed = kDefaultSeed;
};

int emit(const qfock::Json& doc, const std::string& format) {
    if (format == "json") {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << qfock::render_text(doc);
    }
    return qfock::document_passed(doc) ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructions of the type-1 irreducible highest weight modules of the "
                 "restricted quantum sl2 at an odd root of unity, on q-Fock spaces"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_p = [&](CLI::App* cmd) {
        return cmd->add_option("--p", opt.p, "root order (odd, > 1)")->required();
    };

    CLI::App* qbinom = app.add_subcommand("qbinom", "Gaussian binomial, generic or at the root");
    add_p(qbinom);
    qbinom->add_option("--n", opt.n, "upper index")->required();
    qbinom->add_option("--m", opt.m, "lower index")->required();
    qbinom->add_flag("--at-root", opt.at_root, "evaluate at the primitive p-th root of unity");
    add_format(qbinom);

    CLI::App* weyl = app.add_subcommand("weyl", "finite module report");
    add_p(weyl);
    weyl->add_option("--m", opt.m, "maximal weight (>= 0)")->required();
    add_format(weyl);

    CLI::App* infmod = app.add_subcommand("infmod", "infinite module report (windowed)");
    add_p(infmod);
    infmod->add_option("--s", opt.s, "diagonal shift")->required();
    opt.window = -1;
    infmod->add_option("--window", opt.window, "largest basis index (default 6p, minimum 4p)");
    add_format(infmod);

    CLI::App* classify = app.add_subcommand("classify", "construction recipe for V(lambda)");
    add_p(classify);
    classify->add_option("--lambda", opt.lambda, "highest weight")->required();
    add_format(classify);

    CLI::App* verify = app.add_subcommand("verify", "relation and oracle suites");
    add_p(verify);
    verify->add_option("--bound", opt.bound, "basis/order bound (default 5)");
    verify->add_option("--which", opt.which, "realization 1 or 2")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    verify->add_option("--seed", opt.seed, "seed for the randomized checks");
    add_format(verify);

    CLI::App* selftest = app.add_subcommand("selftest", "full acceptance battery");
    selftest->add_option("--seed", opt.seed, "seed for the randomized checks");
    add_format(selftest);

    CLI11_PARSE(app, argc, argv);

    try {
        if (qbinom->parsed()) {
            return emit(qfock::qbinom_document(opt.p, opt.n, opt.m, opt.at_root), opt.format);
        }
        if (weyl->parsed()) {
            if (opt.m < 0) throw qfock::UsageError("--m must be nonnegative");
            return emit(qfock::weyl_document(opt.p, opt.m), opt.format);
        }
        if (infmod->parsed()) {
            qfock::require_valid_p(opt.p);
            const std::int64_t window = opt.window < 0 ? 6 * opt.p : opt.window;
            return emit(qfock::infmod_document(opt.p, opt.s, window), opt.format);
        }
        if (classify->parsed()) {
            return emit(qfock::classify_document(opt.p, opt.lambda), opt.format);
        }
        if (verify->parsed()) {
            return emit(qfock::verify_document(opt.p, opt.which, opt.bound, opt.seed), opt.format);
        }
        if (selftest->parsed()) {
            return emit(qfock::selftest_document(opt.seed), opt.format);
        }
    } catch (const qfock::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const qfock::WindowTooSmallError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
