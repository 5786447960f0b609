#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "perfcode/cli.hpp"

using namespace perfcode;

namespace {

struct Run {
    int rc;
    std::string out;
    std::string err;
};

Run construct(const std::string& desc, const CliOptions& cli = {}) {
    std::ostringstream out, err;
    int rc = cmd_construct(desc, "", cli, out, err);
    return {rc, out.str(), err.str()};
}

Run invariants(const std::string& desc, const CliOptions& cli = {}, bool groups = true) {
    std::ostringstream out, err;
    int rc = cmd_invariants(desc, cli, groups, out, err);
    return {rc, out.str(), err.str()};
}

Run propelinear(const std::string& desc, const CliOptions& cli = {}) {
    std::ostringstream out, err;
    int rc = cmd_propelinear(desc, cli, out, err);
    return {rc, out.str(), err.str()};
}

} // namespace

TEST_CASE("construct writes code files and oracle manifests") {
    Run tiny = construct("hamming:1");
    CHECK(tiny.rc == exit_code::ok);
    CHECK(tiny.out == "n=1 k=1\n0\n");

    Run m15 = construct("mollard(hamming:3,p1)");
    CHECK(m15.rc == exit_code::ok);
    CHECK(m15.out.rfind("n=15 k=2048\n", 0) == 0);
    CHECK(std::count(m15.out.begin(), m15.out.end(), '\n') == 2049);

    Run oracle = construct("mollard(builtin:4918,hamming:3)");
    CHECK(oracle.rc == exit_code::ok);
    nlohmann::json manifest = nlohmann::json::parse(oracle.out);
    CHECK(manifest["type"] == "oracle");
    CHECK(manifest["n"] == 127);
    CHECK(manifest["cardinality_log2"] == 120);
    CHECK(manifest["cardinality"] == "1329227995784915872903807060280344576");

    Run bad = construct("mollard(hamming:3");
    CHECK(bad.rc == exit_code::usage);
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("invariants command") {
    Run r = invariants("builtin:4918");
    CHECK(r.rc == exit_code::ok);
    CHECK(r.out.find("rank: 14 [exact]") != std::string::npos);
    CHECK(r.out.find("kernel_dim: 6 [exact]") != std::string::npos);
    CHECK(r.out.find("mu: 0^15") != std::string::npos);
    CHECK(r.out.find("sym_order: 4") != std::string::npos);

    Run h3 = invariants("hamming:3");
    CHECK(h3.out.find("rank: 4 [exact]") != std::string::npos);
    CHECK(h3.out.find("kernel_dim: 4 [exact]") != std::string::npos);
    CHECK(h3.out.find("mu: 3^7") != std::string::npos);

    // Product arithmetic at length 31: rank 14+0+15, kernel 6+0+15.
    Run m31 = invariants("mollard(builtin:4918,p1)", {}, false);
    CHECK(m31.rc == exit_code::ok);
    CHECK(m31.out.find("rank: 29 [sampled-exact]") != std::string::npos);
    CHECK(m31.out.find("kernel_dim: 21 [formula]") != std::string::npos);
    CHECK(m31.out.find("mu: 1^30 15^1 [formula]") != std::string::npos);

    CliOptions json_cli;
    json_cli.json = true;
    Run js = invariants("hamming:3", json_cli);
    nlohmann::json parsed = nlohmann::json::parse(js.out);
    CHECK(parsed["rank"]["value"] == 4);
}

TEST_CASE("invariants output is byte stable") {
    Run a = invariants("builtin:4918");
    Run b = invariants("builtin:4918");
    CHECK(a.out == b.out);
}

TEST_CASE("propelinear verdicts and exit codes") {
    Run nonprop = propelinear("builtin:4918");
    CHECK(nonprop.rc == exit_code::nonpropelinear);
    CHECK(nonprop.out.find("verdict: nonpropelinear") != std::string::npos);
    CHECK(nonprop.out.find("kind: exhaustive-regular-search") != std::string::npos);

    Run linear = propelinear("hamming:4");
    CHECK(linear.rc == exit_code::ok);
    CHECK(linear.out.find("verdict: propelinear") != std::string::npos);

    Run part1 = propelinear("mollard(builtin:4918,hamming:3)");
    CHECK(part1.rc == exit_code::nonpropelinear);
    CHECK(part1.out.find("kind: theorem1-part1") != std::string::npos);

    Run linear_product = propelinear("mollard(hamming:3,hamming:3)");
    CHECK(linear_product.rc == exit_code::ok);
    CHECK(linear_product.out.find("translations") != std::string::npos);

    // Part 3 route rejects a right side violating the strict window.
    Run part3 = propelinear("mollard(mollard(builtin:4918,hamming:3),hamming:2)");
    CHECK(part3.rc == exit_code::undecided);
    CHECK(part3.out.find("undecided") != std::string::npos);
    CHECK(part3.out.find("mu-window") != std::string::npos);

    Run certjson = [&] {
        CliOptions cli;
        cli.json = true;
        return propelinear("mollard(builtin:4918,p1)", cli);
    }();
    CHECK(certjson.rc == exit_code::nonpropelinear);
    auto start = certjson.out.find('{');
    REQUIRE(start != std::string::npos);
    nlohmann::json cert = nlohmann::json::parse(certjson.out.substr(start));
    CHECK(cert["kind"] == "theorem1-part1");
    CHECK(cert["premises"].size() == 3);
}

TEST_CASE("propelinear output is byte stable") {
    Run a = propelinear("builtin:4918");
    Run b = propelinear("builtin:4918");
    CHECK(a.out == b.out);
}

TEST_CASE("verify under a low budget skips group searches and stays byte stable") {
    CliOptions cli;
    std::ostringstream out1, out2, err;
    int rc1 = cmd_verify(cli, true, out1, err);
    int rc2 = cmd_verify(cli, true, out2, err);
    CHECK(rc1 == exit_code::ok);
    CHECK(rc2 == exit_code::ok);
    CHECK(out1.str() == out2.str());
    CHECK(out1.str().find("[SKIP] 2 ") != std::string::npos);
    CHECK(out1.str().find("[SKIP] 6 ") != std::string::npos);
    CHECK(out1.str().find("[PASS] 1 ") != std::string::npos);
    CHECK(out1.str().find("[PASS] 8 ") != std::string::npos);
    CHECK(out1.str().find("[PASS] 11 ") != std::string::npos);
}

TEST_CASE("exhausted sample budget reports lower bounds with exit 3") {
    CliOptions cli;
    cli.base.sample_budget = 1;  // clamped to the stability window floor
    std::ostringstream out, err;
    int rc = cmd_invariants("mollard(builtin:4918,hamming:3)", cli, false, out, err);
    CHECK(rc == exit_code::budget);
    CHECK(out.str().find("[lower-bound]") != std::string::npos);
    CHECK(err.str().find("lower bound") != std::string::npos);
}
