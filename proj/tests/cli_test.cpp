#include <gtest/gtest.h>

#include <cstdio>

#include <nlohmann/json.hpp>

#include "cli_helpers.hpp"

namespace bcmc::tests {
namespace {

using nlohmann::json;

TEST(CliExact, StarCenterClosedForm) {
    CliResult result = run_cli("exact --gen star:5 --vertex c");
    ASSERT_EQ(result.exit_code, 0) << result.err;
    json report = json::parse(result.out);
    EXPECT_EQ(report["schema_version"], 1);
    EXPECT_EQ(report["command"], "exact");
    EXPECT_EQ(report["graph"]["n"], 5);
    EXPECT_DOUBLE_EQ(report["results"]["betweenness"].get<double>(), 0.6);
}

TEST(CliExact, FullVectorOnPath) {
    CliResult result = run_cli("exact --gen path:3");
    ASSERT_EQ(result.exit_code, 0) << result.err;
    json report = json::parse(result.out);
    EXPECT_EQ(report["results"]["betweenness"]["a"].get<double>(), 0.0);
    EXPECT_DOUBLE_EQ(report["results"]["betweenness"]["b"].get<double>(), 1.0 / 3.0);
    EXPECT_EQ(report["results"]["betweenness"]["c"].get<double>(), 0.0);
}

TEST(CliExact, WeightedEdgeListFile) {
    const std::string path = write_temp_graph("weighted", "a b 1\nb c 1\na c 2\n");
    CliResult result = run_cli("exact --graph " + path + " --weighted --vertex b");
    std::remove(path.c_str());
    ASSERT_EQ(result.exit_code, 0) << result.err;
    json report = json::parse(result.out);
    EXPECT_NEAR(report["results"]["betweenness"].get<double>(), 1.0 / 6.0, 1e-12);
    EXPECT_EQ(report["graph"]["weighted"], true);
}

TEST(CliExact, InputErrorsExitTwo) {
    EXPECT_EQ(run_cli("exact --graph /nonexistent/file.edges").exit_code, 2);
    EXPECT_EQ(run_cli("exact --gen star:5 --vertex nosuch").exit_code, 2);
    EXPECT_EQ(run_cli("exact --gen wedge:9").exit_code, 2);
    EXPECT_EQ(run_cli("exact").exit_code, 2);
    EXPECT_EQ(run_cli("exact --gen star:5 --graph x").exit_code, 2);
    EXPECT_EQ(run_cli("exact --gen star:5 --weighted").exit_code, 2);

    const std::string dup = write_temp_graph("dup", "a b\na b\n");
    EXPECT_EQ(run_cli("exact --graph " + dup).exit_code, 2);
    std::remove(dup.c_str());

    const std::string split = write_temp_graph("split", "a b\nc d\n");
    CliResult result = run_cli("exact --graph " + split);
    std::remove(split.c_str());
    EXPECT_EQ(result.exit_code, 2);
    EXPECT_NE(result.err.find("disconnected"), std::string::npos);
}

TEST(CliEstimate, TrafficFreeLeafReportsZero) {
    CliResult result = run_cli("estimate --gen path:3 --vertex a --T 100 --seed 4");
    ASSERT_EQ(result.exit_code, 0) << result.err;
    json report = json::parse(result.out);
    EXPECT_EQ(report["results"]["estimate"].get<double>(), 0.0);
    EXPECT_EQ(report["results"]["traffic_free"], true);
}

TEST(CliEstimate, PlannedRunCarriesDiagnostics) {
    CliResult result =
        run_cli("estimate --gen star:8 --vertex c --epsilon 0.05 --delta 0.1 --seed 1 --exact-check");
    ASSERT_EQ(result.exit_code, 0) << result.err;
    json report = json::parse(result.out);
    EXPECT_EQ(report["results"]["iterations"], 783);
    EXPECT_EQ(report["results"]["planning"]["mu_source"], "exact");
    EXPECT_NEAR(report["results"]["planning"]["mu"].get<double>(), 8.0 / 7.0, 1e-12);
    EXPECT_DOUBLE_EQ(report["results"]["exact"]["betweenness"].get<double>(), 0.75);
    EXPECT_LE(report["results"]["exact"]["absolute_error"].get<double>(), 0.05);
    EXPECT_EQ(report["params"]["rng"], "splitmix64");
}

TEST(CliEstimate, MuOverrideSkipsExactPlanning) {
    CliResult result =
        run_cli("estimate --gen star:8 --vertex c --epsilon 0.05 --delta 0.1 --mu 2 --seed 1");
    ASSERT_EQ(result.exit_code, 0) << result.err;
    json report = json::parse(result.out);
    EXPECT_EQ(report["results"]["planning"]["mu_source"], "override");
    EXPECT_EQ(report["results"]["planning"]["mu"].get<double>(), 2.0);
}

TEST(CliEstimate, UsageErrors) {
    EXPECT_EQ(run_cli("estimate --gen star:5 --vertex c").exit_code, 2);  // no budget
    EXPECT_EQ(run_cli("estimate --gen star:5 --vertex c --T 10 --epsilon 0.1 --delta 0.1").exit_code, 2);
    EXPECT_EQ(run_cli("estimate --gen star:5 --vertex c --epsilon 0.1").exit_code, 2);
    EXPECT_EQ(run_cli("estimate --gen star:5 --T 10").exit_code, 2);  // missing --vertex
}

TEST(CliEstimate, SeedFromEnvironmentAndFlagPrecedence) {
    CliResult from_env = run_cli("estimate --gen star:5 --vertex c --T 50", "BCMC_SEED=77 ");
    ASSERT_EQ(from_env.exit_code, 0) << from_env.err;
    EXPECT_EQ(json::parse(from_env.out)["params"]["seed"], 77);

    CliResult flag_wins = run_cli("estimate --gen star:5 --vertex c --T 50 --seed 5", "BCMC_SEED=77 ");
    ASSERT_EQ(flag_wins.exit_code, 0);
    EXPECT_EQ(json::parse(flag_wins.out)["params"]["seed"], 5);

    EXPECT_EQ(run_cli("estimate --gen star:5 --vertex c --T 50", "BCMC_SEED=abc ").exit_code, 2);
}

TEST(CliRelative, PathPairWithExactCheck) {
    CliResult result = run_cli("relative --gen path:4 --set b,c --T 20000 --seed 3 --exact-check");
    ASSERT_EQ(result.exit_code, 0) << result.err;
    json report = json::parse(result.out);
    EXPECT_EQ(report["results"]["strata"]["b"].get<int>() + report["results"]["strata"]["c"].get<int>(),
              20001);
    const json& pair = report["results"]["pairs"][0];
    EXPECT_EQ(pair["r_i"], "b");
    EXPECT_EQ(pair["r_j"], "c");
    EXPECT_NEAR(pair["ratio"].get<double>(), 1.0, 0.05);
    EXPECT_EQ(pair["exact_relative_ij"].get<double>(), 0.625);
    EXPECT_EQ(pair["exact_ratio"].get<double>(), 1.0);
    EXPECT_EQ(pair["identity_rhs"].get<double>(), 1.0);
}

TEST(CliRelative, EmptyStratumReportedNotFatal) {
    CliResult result = run_cli("relative --gen star:5 --set c,l1 --T 2000 --seed 5 --exact-check");
    ASSERT_EQ(result.exit_code, 0) << result.err;
    json report = json::parse(result.out);
    const json& pair = report["results"]["pairs"][0];
    EXPECT_EQ(report["results"]["strata"]["l1"], 0);
    EXPECT_TRUE(pair["relative_ij"].is_null());
    EXPECT_TRUE(pair["ratio"].is_null());
    EXPECT_TRUE(pair["exact_ratio"].is_null());  // the leaf has zero betweenness
}

TEST(CliRelative, UsageErrors) {
    EXPECT_EQ(run_cli("relative --gen path:4 --set b --T 100").exit_code, 2);
    EXPECT_EQ(run_cli("relative --gen path:4 --set b,b --T 100").exit_code, 2);
    EXPECT_EQ(run_cli("relative --gen path:4 --set b,c").exit_code, 2);  // missing --T
}

TEST(CliVerify, SuitesPassAndFailuresAreExitOne) {
    CliResult result = run_cli("verify theorem3");
    ASSERT_EQ(result.exit_code, 0) << result.err;
    json report = json::parse(result.out);
    EXPECT_EQ(report["results"]["failed"], 0);
    EXPECT_GT(report["results"]["passed"].get<int>(), 0);
    EXPECT_NE(result.err.find("[PASS]"), std::string::npos);

    EXPECT_EQ(run_cli("verify nosuchsuite").exit_code, 2);
}

TEST(CliDeterminism, RepeatedRunsAreByteIdenticalModuloTiming) {
    const std::string cmd = "estimate --gen star:8 --vertex c --epsilon 0.05 --delta 0.1 --seed 42";
    CliResult a = run_cli(cmd);
    CliResult b = run_cli(cmd);
    ASSERT_EQ(a.exit_code, 0);
    EXPECT_EQ(strip_timing(a.out), strip_timing(b.out));
    EXPECT_NE(a.out.find("\"timing\""), std::string::npos);

    CliResult c = run_cli("relative --gen path:4 --set b,c --T 500 --seed 11");
    CliResult d = run_cli("relative --gen path:4 --set b,c --T 500 --seed 11");
    EXPECT_EQ(strip_timing(c.out), strip_timing(d.out));
}

TEST(CliReports, RerunnableFromEchoedParameters) {
    CliResult original =
        run_cli("estimate --gen two_blocks_cut:4:4 --vertex r --epsilon 0.1 --delta 0.2 --seed 31337");
    ASSERT_EQ(original.exit_code, 0) << original.err;
    json params = json::parse(original.out)["params"];

    std::string rebuilt = "estimate --gen " + params["generator"].get<std::string>() +
                          " --vertex " + params["vertex"].get<std::string>() +
                          " --epsilon " + std::to_string(params["epsilon"].get<double>()) +
                          " --delta " + std::to_string(params["delta"].get<double>()) +
                          " --seed " + std::to_string(params["seed"].get<std::uint64_t>());
    CliResult replay = run_cli(rebuilt);
    ASSERT_EQ(replay.exit_code, 0) << replay.err;
    EXPECT_EQ(strip_timing(original.out), strip_timing(replay.out));
}

TEST(CliReports, FloatsCarryFullPrecision) {
    CliResult result = run_cli("exact --gen star:5 --vertex c");
    ASSERT_EQ(result.exit_code, 0);
    // 0.6 is not exactly representable; full-precision output keeps all digits
    EXPECT_NE(result.out.find("0.59999999999999998"), std::string::npos);
}

}  // namespace
}  // namespace bcmc::tests
