#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "qfock/errors.hpp"
#include "qfock/json_report.hpp"

using namespace qfock;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file: " << path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string golden(const std::string& name) {
    return read_file(std::string(QFOCK_GOLDEN_DIR) + "/" + name);
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(QFOCK_CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf{};
    size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        result.output.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("documents match their golden files") {
    CHECK(qbinom_document(5, 13, 5, true).dump(2) + "\n" == golden("qbinom_at_root.json"));
    CHECK(qbinom_document(3, 4, 2, false).dump(2) + "\n" == golden("qbinom_generic.json"));
    CHECK(weyl_document(5, 12).dump(2) + "\n" == golden("weyl_p5_m12.json"));
    CHECK(infmod_document(3, 7, 12).dump(2) + "\n" == golden("infmod_p3_s7_w12.json"));
    CHECK(classify_document(3, -8).dump(2) + "\n" == golden("classify_p3_lm8.json"));
    CHECK(verify_document(3, 1, 2, 20240901).dump(2) + "\n" == golden("verify_p3_w1_b2.json"));
}

TEST_CASE("documents are deterministic") {
    CHECK(weyl_document(5, 12).dump(2) == weyl_document(5, 12).dump(2));
    CHECK(verify_document(3, 2, 2, 7).dump(2) == verify_document(3, 2, 2, 7).dump(2));
}

TEST_CASE("verification documents carry the gate") {
    const Json good = verify_document(3, 1, 2, 1);
    CHECK(document_passed(good));
    CHECK(good["payload"]["all_passed"].get<bool>());
    CHECK(good["payload"]["counterexample"].is_null());
    CHECK(document_passed(weyl_document(3, 2)));
}

TEST_CASE("usage validation") {
    CHECK_THROWS_AS((void)qbinom_document(4, 1, 1, false), UsageError);
    CHECK_THROWS_AS((void)verify_document(3, 1, 0, 1), UsageError);
}

TEST_CASE("process-level behaviour of the binary") {
    SUBCASE("binomial at the root prints the bare value") {
        const RunResult r = run_cli("qbinom --p 5 --n 13 --m 5 --at-root");
        CHECK(r.exit_code == 0);
        CHECK(r.output == "2\n");
    }
    SUBCASE("invalid p is a usage error") {
        const RunResult r = run_cli("qbinom --p 4 --n 1 --m 1");
        CHECK(r.exit_code == 1);
    }
    SUBCASE("window below the minimum is a usage error") {
        const RunResult r = run_cli("infmod --p 3 --s 1 --window 5");
        CHECK(r.exit_code == 1);
    }
    SUBCASE("verify exits clean on success") {
        const RunResult r = run_cli("verify --p 3 --which 1 --bound 2");
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("all checks passed") != std::string::npos);
    }
    SUBCASE("json output is byte-identical across runs") {
        const std::string args = "weyl --p 5 --m 12 --format json";
        const RunResult a = run_cli(args);
        const RunResult b = run_cli(args);
        CHECK(a.exit_code == 0);
        CHECK(a.output == b.output);
        CHECK(a.output == golden("weyl_p5_m12.json"));
    }
    SUBCASE("text reports name the construction") {
        const RunResult r = run_cli("classify --p 3 --lambda -4");
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("infinite(p=3, s=3)") != std::string::npos);
    }
    SUBCASE("weyl text output") {
        const RunResult r = run_cli("weyl --p 5 --m 3");
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("irreducible: true") != std::string::npos);
        CHECK(r.output.find("dim: 4") != std::string::npos);
    }
    SUBCASE("infmod text output reports the submodule and quotient weights") {
        const RunResult r = run_cli("infmod --p 3 --s 7 --window 12");
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("lambda=-12") != std::string::npos);
        CHECK(r.output.find("lambda=-8") != std::string::npos);
    }
}
