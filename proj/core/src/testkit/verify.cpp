#include "bcmc/testkit/verify.hpp"

#include <chrono>
#include <cmath>
#include <span>
#include <vector>

#include "bcmc/brandes.hpp"
#include "bcmc/joint_chain.hpp"
#include "bcmc/rng.hpp"
#include "bcmc/single_chain.hpp"
#include "bcmc/testkit/brute_force.hpp"
#include "bcmc/testkit/coverage.hpp"
#include "bcmc/testkit/generators.hpp"
#include "bcmc/testkit/kernel.hpp"

namespace bcmc::testkit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

Check leq(std::string name, double observed, double threshold, std::string detail = "") {
    return {std::move(name), observed <= threshold, observed, threshold, std::move(detail)};
}

Check geq(std::string name, double observed, double threshold, std::string detail = "") {
    return {std::move(name), observed >= threshold, observed, threshold, std::move(detail)};
}

/// The 100 seeded random instances shared by the oracle and identity suites:
/// connected gnp graphs with 4..10 vertices and edge probability 0.4.
std::vector<GeneratorSpec> random_suite(std::uint64_t seed) {
    SplitMix64 seeder = SplitMix64::derive(seed, 7);
    std::vector<GeneratorSpec> specs;
    specs.reserve(100);
    for (int i = 0; i < 100; ++i) {
        GeneratorSpec spec;
        spec.family = GraphFamily::gnp;
        spec.n = 4 + static_cast<std::size_t>(i % 7);
        spec.p = 0.4;
        spec.seed = seeder.next();
        specs.push_back(spec);
    }
    return specs;
}

// Failure budget delta plus three-sigma binomial slack at the given run count.
double slacked_failure_threshold(double delta, double runs) {
    return delta + 3.0 * std::sqrt(delta * (1.0 - delta) / runs);
}

}  // namespace

SuiteReport verify_oracle(std::uint64_t seed) {
    const auto start = Clock::now();
    SuiteReport report;
    report.suite = "oracle";

    std::vector<std::string> family_specs;
    for (std::size_t n = 3; n <= 12; ++n) family_specs.push_back("path:" + std::to_string(n));
    for (std::size_t n = 3; n <= 12; ++n) family_specs.push_back("cycle:" + std::to_string(n));
    for (std::size_t n = 4; n <= 12; ++n) family_specs.push_back("star:" + std::to_string(n));
    for (std::size_t n = 3; n <= 12; ++n) family_specs.push_back("complete:" + std::to_string(n));
    for (const char* spec : {"barbell:3:1", "barbell:3:2", "barbell:4:1", "barbell:4:2", "barbell:5:2"}) {
        family_specs.push_back(spec);
    }

    double worst_family = 0.0;
    for (const std::string& spec : family_specs) {
        const Graph g = generate(spec);
        worst_family = std::max(
            worst_family, max_abs_diff(exact_betweenness(g).values, brute_force_betweenness(g).values));
    }
    report.checks.push_back(leq("families_vs_enumeration", worst_family, 1e-9,
                                std::to_string(family_specs.size()) + " graphs"));

    double worst_random = 0.0;
    for (const GeneratorSpec& spec : random_suite(seed)) {
        const Graph g = generate(spec);
        worst_random = std::max(
            worst_random, max_abs_diff(exact_betweenness(g).values, brute_force_betweenness(g).values));
    }
    report.checks.push_back(leq("random_vs_enumeration", worst_random, 1e-9, "100 seeded gnp graphs"));

    double worst_star = 0.0;
    for (std::size_t n = 4; n <= 12; ++n) {
        const Graph g = generate("star:" + std::to_string(n));
        const double expected = static_cast<double>(n - 2) / static_cast<double>(n);
        worst_star = std::max(worst_star, std::abs(exact_betweenness_single(g, g.require("c")) - expected));
    }
    report.checks.push_back(leq("closed_form_star_centers", worst_star, 1e-12, "(n-2)/n for n=4..12"));

    {
        const Graph p3 = generate("path:3");
        report.checks.push_back(leq("closed_form_path3_middle",
                                    std::abs(exact_betweenness_single(p3, p3.require("b")) - 1.0 / 3.0),
                                    1e-12));
        const Graph c4 = generate("cycle:4");
        const BetweennessVector bc = exact_betweenness(c4);
        double worst = 0.0;
        for (double x : bc.values) worst = std::max(worst, std::abs(x - 1.0 / 12.0));
        report.checks.push_back(leq("closed_form_cycle4", worst, 1e-12));
    }

    report.checks.push_back(leq("runtime_seconds", seconds_since(start), 10.0));
    return report;
}

SuiteReport verify_kernel() {
    const auto start = Clock::now();
    SuiteReport report;
    report.suite = "kernel";

    const std::vector<std::string> specs = {"path:4",          "path:5",      "cycle:5",
                                            "cycle:6",         "star:6",      "two_blocks_cut:3:3",
                                            "barbell:3:1",     "gnp:7:0.45:11", "gnp:8:0.35:29",
                                            "complete:5"};

    double single_pi = 0.0, single_db = 0.0, single_rows = 0.0;
    double joint_pi = 0.0, joint_db = 0.0, joint_rows = 0.0;
    int single_kernels = 0, joint_kernels = 0;
    int zero_rejections = 0, zero_expected = 0;

    for (const std::string& spec : specs) {
        const Graph g = generate(spec);
        const std::size_t n = g.vertex_count();
        DependencyWorkspace ws;
        std::vector<double> mass(n, 0.0);
        for (Vertex v = 0; v < n; ++v) {
            const std::vector<double>& dep = ws.compute(g, v);
            for (std::size_t r = 0; r < n; ++r) mass[r] += dep[r];
        }

        for (Vertex r = 0; r < n; ++r) {
            if (mass[r] > 0.0) {
                const KernelMatrix kernel = single_space_kernel(g, r);
                single_pi = std::max(single_pi, stationarity_residual(kernel));
                single_db = std::max(single_db, detailed_balance_residual(kernel));
                single_rows = std::max(single_rows, row_sum_residual(kernel));
                ++single_kernels;
            } else {
                ++zero_expected;
                try {
                    single_space_kernel(g, r);
                } catch (const AllZeroDependencyError&) {
                    ++zero_rejections;
                }
            }
        }

        for (Vertex a = 0; a < n; ++a) {
            for (Vertex b = a + 1; b < n; ++b) {
                const Vertex pair[] = {a, b};
                if (mass[a] + mass[b] > 0.0) {
                    const KernelMatrix kernel = joint_space_kernel(g, pair);
                    joint_pi = std::max(joint_pi, stationarity_residual(kernel));
                    joint_db = std::max(joint_db, detailed_balance_residual(kernel));
                    joint_rows = std::max(joint_rows, row_sum_residual(kernel));
                    ++joint_kernels;
                } else {
                    ++zero_expected;
                    try {
                        joint_space_kernel(g, pair);
                    } catch (const AllZeroDependencyError&) {
                        ++zero_rejections;
                    }
                }
            }
        }
    }

    report.checks.push_back(leq("single_stationarity_residual", single_pi, 1e-12,
                                std::to_string(single_kernels) + " kernels"));
    report.checks.push_back(leq("single_detailed_balance_residual", single_db, 1e-12));
    report.checks.push_back(leq("single_row_sum_residual", single_rows, 1e-12));
    report.checks.push_back(leq("joint_stationarity_residual", joint_pi, 1e-12,
                                std::to_string(joint_kernels) + " kernels"));
    report.checks.push_back(leq("joint_detailed_balance_residual", joint_db, 1e-12));
    report.checks.push_back(leq("joint_row_sum_residual", joint_rows, 1e-12));
    report.checks.push_back({"traffic_free_targets_rejected", zero_rejections == zero_expected,
                             static_cast<double>(zero_rejections), static_cast<double>(zero_expected),
                             "kernels on all-zero targets must refuse"});
    report.checks.push_back(leq("runtime_seconds", seconds_since(start), 30.0));
    return report;
}

SuiteReport verify_theorem2(std::uint64_t seed) {
    const auto start = Clock::now();
    SuiteReport report;
    report.suite = "theorem2";

    // Two layers: the balance identity sum_v delta_i * min{1, delta_j/delta_i}
    // = sum_v delta_j * min{1, delta_i/delta_j} holds for every pair, while
    // the ratio form BC_i/BC_j = E_j[...]/E_i[...] additionally needs the
    // dependency supports to overlap (otherwise it reads 0/0). Sparse random
    // graphs do produce positive-betweenness pairs with disjoint supports, so
    // those are counted and checked against the balance identity only.
    double worst_ratio = 0.0;
    double worst_balance = 0.0;
    int pairs_checked = 0;
    int degenerate_pairs = 0;
    for (const GeneratorSpec& spec : random_suite(seed)) {
        const Graph g = generate(spec);
        const BetweennessVector bc = exact_betweenness(g);
        const std::size_t n = g.vertex_count();

        std::vector<std::vector<double>> dep(n);
        DependencyWorkspace ws;
        for (Vertex v = 0; v < n; ++v) dep[v] = ws.compute(g, v);

        for (Vertex i = 0; i < n; ++i) {
            for (Vertex j = i + 1; j < n; ++j) {
                if (bc.values[i] == 0.0 || bc.values[j] == 0.0) continue;
                double forward = 0.0, backward = 0.0, overlap = 0.0;
                for (Vertex v = 0; v < n; ++v) {
                    forward += dep[v][i] * capped_ratio(dep[v][j], dep[v][i]);
                    backward += dep[v][j] * capped_ratio(dep[v][i], dep[v][j]);
                    overlap += std::min(dep[v][i], dep[v][j]);
                }
                worst_balance = std::max(worst_balance, std::abs(forward - backward));
                if (overlap == 0.0) {
                    ++degenerate_pairs;
                    continue;
                }
                auto [lhs, rhs] = betweenness_ratio_identity(g, i, j);
                worst_ratio = std::max(worst_ratio, std::abs(lhs - rhs));
                ++pairs_checked;
            }
        }
    }

    report.checks.push_back(leq("ratio_identity_residual", worst_ratio, 1e-9,
                                std::to_string(pairs_checked) + " pairs on 100 graphs; " +
                                    std::to_string(degenerate_pairs) +
                                    " disjoint-support pairs carry no ratio"));
    report.checks.push_back(leq("balance_identity_residual", worst_balance, 1e-12,
                                "all pairs, disjoint supports included"));
    report.checks.push_back(leq("runtime_seconds", seconds_since(start), 60.0));
    return report;
}

SuiteReport verify_theorem3() {
    SuiteReport report;
    report.suite = "theorem3";

    double worst_mu = 0.0;
    for (std::size_t k = 3; k <= 20; ++k) {
        const Graph g = generate("two_blocks_cut:" + std::to_string(k) + ":" + std::to_string(k));
        worst_mu = std::max(worst_mu, mu_exact(g, g.require("r")).mu);
    }
    report.checks.push_back(leq("cut_vertex_mu_bounded", worst_mu, 2.2, "two_blocks_cut(k,k), k=3..20"));

    double worst_star = 0.0;
    for (std::size_t n = 4; n <= 50; ++n) {
        const Graph g = generate("star:" + std::to_string(n));
        const double expected = static_cast<double>(n) / static_cast<double>(n - 1);
        worst_star = std::max(worst_star, std::abs(mu_exact(g, g.require("c")).mu - expected));
    }
    report.checks.push_back(leq("star_center_mu_matches_closed_form", worst_star, 1e-12, "n=4..50"));
    return report;
}

SuiteReport verify_coverage(std::uint64_t seed) {
    SuiteReport report;
    report.suite = "coverage";

    constexpr double kEps = 0.05;
    constexpr double kDelta = 0.1;
    constexpr std::uint64_t kRuns = 200;
    const double failure_threshold = slacked_failure_threshold(kDelta, static_cast<double>(kRuns));

    const auto single_start = Clock::now();
    {
        const Graph g = generate("star:8");
        const CoverageResult cov = single_coverage_experiment(g, g.require("c"), kEps, kDelta, kRuns,
                                                              SplitMix64::derive(seed, 1).next());
        report.checks.push_back(geq("star8_fraction_within", cov.fraction_within, 1.0 - kDelta,
                                    "T=" + std::to_string(cov.planned_samples)));
        report.checks.push_back(
            leq("star8_failure_fraction", 1.0 - cov.fraction_within, failure_threshold));
    }
    {
        const Graph g = generate("two_blocks_cut:5:5");
        const CoverageResult cov = single_coverage_experiment(g, g.require("r"), kEps, kDelta, kRuns,
                                                              SplitMix64::derive(seed, 2).next());
        report.checks.push_back(geq("two_blocks_fraction_within", cov.fraction_within, 1.0 - kDelta,
                                    "T=" + std::to_string(cov.planned_samples)));
        report.checks.push_back(
            leq("two_blocks_failure_fraction", 1.0 - cov.fraction_within, failure_threshold));
    }
    report.checks.push_back(leq("single_runtime_seconds", seconds_since(single_start), 300.0));

    const auto joint_start = Clock::now();
    {
        const Graph g = generate("path:8");
        const Vertex targets[] = {g.require("d"), g.require("e")};
        const CoverageResult cov = joint_coverage_experiment(g, targets, targets[0], targets[1], kEps,
                                                             kDelta, kRuns, SplitMix64::derive(seed, 3).next());
        report.checks.push_back(leq("path8_relative_failure_fraction", 1.0 - cov.fraction_within,
                                    failure_threshold,
                                    "stratum budget " + std::to_string(cov.planned_samples) +
                                        ", mean achieved " + std::to_string(cov.mean_achieved_stratum)));
    }
    report.checks.push_back(leq("joint_runtime_seconds", seconds_since(joint_start), 300.0));
    return report;
}

}  // namespace bcmc::testkit
