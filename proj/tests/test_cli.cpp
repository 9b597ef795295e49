#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string out_file = "cli_out.tmp";
    std::string cmd = std::string(FIBWALK_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(out_file.c_str());
    return {WEXITSTATUS(rc), ss.str()};
}

}  // namespace

TEST_CASE("query subcommands") {
    auto r = run_cli("fib 10");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "55\n");

    r = run_cli("fib 300");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "222232244629420445529739893461909967206666939096499764990979600\n");

    r = run_cli("is-fib 89");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("index 11") != std::string::npos);

    r = run_cli("is-fib 90");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("not fibonacci") != std::string::npos);

    r = run_cli("pisano 10");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("= 60") != std::string::npos);

    r = run_cli("walks --start 8 --mode exact --n 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("8 -> 89") != std::string::npos);

    r = run_cli("bound --theorem2 --n 4 --n0 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "4\n");

    r = run_cli("bound --theorem2 --n 1 --n0 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("no append possible") != std::string::npos);
}

TEST_CASE("verify exit code contract") {
    // 0: a passing check
    auto r = run_cli("verify pisano10");
    CHECK(r.exit_code == 0);

    // 1: injected fault must surface as a verification failure
    r = run_cli("verify self_test_fault --inject-fault --format json");
    CHECK(r.exit_code == 1);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["summary"]["fail"].get<int>() >= 1);

    // 2: usage errors
    CHECK(run_cli("verify no_such_check").exit_code == 2);
    CHECK(run_cli("verify pisano10 --format xml").exit_code == 2);
    CHECK(run_cli("verify pisano10 --lemma3-max 100000").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("verify writes reports to files") {
    auto r = run_cli("verify theorem1 --format json --out report.tmp");
    CHECK(r.exit_code == 0);
    std::ifstream in("report.tmp");
    REQUIRE(in.good());
    auto j = nlohmann::json::parse(in);
    REQUIRE(j["checks"].size() == 1);
    CHECK(j["checks"][0]["name"] == "theorem1");
    CHECK(j["checks"][0]["status"] == "pass");
    CHECK(j["checks"][0]["witnesses"].size() == 5);
    std::remove("report.tmp");
}

TEST_CASE("config file provides the same keys as flags") {
    std::ofstream("cli_cfg.tmp") << "[verify]\nbinet-max=400\n";
    auto r = run_cli("verify binet_grid --config cli_cfg.tmp --format json");
    std::remove("cli_cfg.tmp");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["checks"][0]["params"]["n_max"] == 400);
}

TEST_CASE("thread-count override is accepted") {
    auto r = run_cli("verify pisano10 --threads 2");
    CHECK(r.exit_code == 0);
}
