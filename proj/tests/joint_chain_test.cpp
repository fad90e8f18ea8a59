#include "bcmc/joint_chain.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "bcmc/single_chain.hpp"
#include "bcmc/testkit/brute_force.hpp"
#include "bcmc/testkit/generators.hpp"
#include "bcmc/testkit/kernel.hpp"

namespace bcmc {
namespace {

TEST(RunJointChain, TraceLengthAndStrataPartition) {
    Graph g = testkit::generate("path:4");
    const Vertex targets[] = {g.require("b"), g.require("c")};
    JointChainTrace trace = run_joint_chain(g, targets, 1, 3);
    EXPECT_EQ(trace.states.size(), 2u);

    trace = run_joint_chain(g, targets, 700, 3);
    EXPECT_EQ(trace.states.size(), 701u);
    EXPECT_EQ(trace.strata[0].size() + trace.strata[1].size(), 701u);
}

TEST(RunJointChain, EqualDependencyMassGivesEqualStrata) {
    // On path:4 both interior vertices carry total dependency 4, so the chain
    // splits its time evenly between the two strata.
    Graph g = testkit::generate("path:4");
    const Vertex targets[] = {g.require("b"), g.require("c")};
    JointChainTrace trace = run_joint_chain(g, targets, 200000, 5);
    const double half = static_cast<double>(trace.states.size()) / 2.0;
    EXPECT_NEAR(static_cast<double>(trace.strata[0].size()), half, 0.01 * half);
    EXPECT_NEAR(static_cast<double>(trace.strata[1].size()), half, 0.01 * half);
}

TEST(RunJointChain, TrafficFreeTargetNeverAcceptedAfterEscape) {
    Graph g = testkit::generate("star:5");
    const Vertex center = g.require("c");
    const Vertex leaf = g.require("l1");
    const Vertex targets[] = {center, leaf};
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        JointChainTrace trace = run_joint_chain(g, targets, 2000, seed);
        std::size_t first_positive = 0;
        while (first_positive < trace.states.size() &&
               trace.dependency_at(trace.states[first_positive].target,
                                   trace.states[first_positive].source) == 0.0) {
            ++first_positive;
        }
        ASSERT_LT(first_positive, trace.states.size());
        for (std::size_t t = first_positive; t < trace.states.size(); ++t) {
            ASSERT_EQ(trace.states[t].target, center) << "seed " << seed;
        }
    }
}

TEST(RunJointChain, ParameterValidation) {
    Graph g = testkit::generate("path:4");
    const Vertex b = g.require("b");
    const Vertex single[] = {b};
    EXPECT_THROW(run_joint_chain(g, single, 10, 1), InvalidParameterError);
    const Vertex dup[] = {b, b};
    EXPECT_THROW(run_joint_chain(g, dup, 10, 1), InvalidParameterError);
    const Vertex out[] = {b, 99};
    EXPECT_THROW(run_joint_chain(g, out, 10, 1), InvalidParameterError);
    const Vertex ok[] = {b, g.require("c")};
    EXPECT_THROW(run_joint_chain(g, ok, 0, 1), InvalidParameterError);
}

TEST(RunJointChain, AllTargetsTrafficFree) {
    Graph g = testkit::generate("star:5");
    const Vertex leaves[] = {g.require("l1"), g.require("l2")};
    EXPECT_THROW(run_joint_chain(g, leaves, 100, 1), AllZeroDependencyError);
}

TEST(RunJointChain, DeterministicGivenSeed) {
    Graph g = testkit::generate("gnp:8:0.4:6");
    const Vertex targets[] = {0, 1, 2};
    JointChainTrace a = run_joint_chain(g, targets, 3000, 21);
    JointChainTrace b = run_joint_chain(g, targets, 3000, 21);
    EXPECT_EQ(a.states, b.states);
    EXPECT_EQ(a.accepted, b.accepted);
}

TEST(RunJointChain, CrossTargetScoresAreCached) {
    Graph g = testkit::generate("gnp:8:0.4:6");
    const Vertex targets[] = {0, 1, 2};
    JointChainTrace trace = run_joint_chain(g, targets, 500, 4);
    for (const JointState& s : trace.states) {
        for (Vertex r : targets) {
            EXPECT_NO_THROW(trace.dependency_at(r, s.source));
        }
    }
}

TEST(RelativeBetweennessExact, PathOfFour) {
    Graph g = testkit::generate("path:4");
    EXPECT_EQ(relative_betweenness(g, g.require("b"), g.require("c")), 0.625);
    EXPECT_EQ(relative_betweenness(g, g.require("c"), g.require("b")), 0.625);
}

TEST(RelativeBetweennessExact, SelfComparisonIsOne) {
    Graph g = testkit::generate("gnp:7:0.4:8");
    for (Vertex r = 0; r < g.vertex_count(); ++r) {
        EXPECT_EQ(relative_betweenness(g, r, r), 1.0);
    }
}

TEST(RelativeBetweennessExact, CycleOfFourDependsOnThePair) {
    // Opposite vertices have identical dependency patterns (score 1); adjacent
    // ones overlap on nothing, and only the x/0 -> 1 and 0/0 -> 1 conventions
    // contribute, one term each (score 0.5).
    Graph g = testkit::generate("cycle:4");
    const Vertex a = 0, b = 1, c = 2, d = 3;
    EXPECT_EQ(relative_betweenness(g, a, c), 1.0);
    EXPECT_EQ(relative_betweenness(g, b, d), 1.0);
    EXPECT_EQ(relative_betweenness(g, a, b), 0.5);
    EXPECT_EQ(relative_betweenness(g, b, a), 0.5);
}

TEST(RelativeBetweennessExact, StarLeafAgainstCenter) {
    // Only the center contributes (0/0 -> 1); every leaf source yields 0.
    Graph g = testkit::generate("star:5");
    EXPECT_EQ(relative_betweenness(g, g.require("l1"), g.require("c")), 0.2);
}

TEST(StationaryRelativeMean, PathOfFourOverlap) {
    Graph g = testkit::generate("path:4");
    EXPECT_EQ(stationary_relative_mean(g, g.require("b"), g.require("c")), 0.5);
    EXPECT_EQ(stationary_relative_mean(g, g.require("c"), g.require("b")), 0.5);
    EXPECT_THROW(stationary_relative_mean(g, g.require("b"), g.require("a")), AllZeroDependencyError);
}

TEST(EstimateRelativeBetweenness, ConvergesToTheStationaryMean) {
    Graph g = testkit::generate("path:4");
    const Vertex b = g.require("b"), c = g.require("c");
    const Vertex targets[] = {b, c};
    JointChainTrace trace = run_joint_chain(g, targets, 200000, 5);
    EXPECT_NEAR(estimate_relative_betweenness(trace, b, c), stationary_relative_mean(g, b, c), 0.01);
    EXPECT_NEAR(estimate_relative_betweenness(trace, c, b), stationary_relative_mean(g, c, b), 0.01);
}

TEST(EstimateRelativeBetweenness, SelfPairIsExactlyOne) {
    Graph g = testkit::generate("path:4");
    const Vertex b = g.require("b"), c = g.require("c");
    const Vertex targets[] = {b, c};
    JointChainTrace trace = run_joint_chain(g, targets, 500, 2);
    EXPECT_EQ(estimate_relative_betweenness(trace, b, b), 1.0);
    EXPECT_EQ(estimate_relative_betweenness(trace, c, c), 1.0);
}

TEST(EstimateRelativeBetweenness, LeafDirectionDiesOut) {
    Graph g = testkit::generate("star:5");
    const Vertex targets[] = {g.require("c"), g.require("l1")};
    JointChainTrace trace = run_joint_chain(g, targets, 50000, 1);
    // Post-escape the center stratum holds only leaf sources, whose dependency
    // on another leaf is zero.
    EXPECT_LE(estimate_relative_betweenness(trace, g.require("l1"), g.require("c")), 0.001);
}

TEST(EstimateBetweennessRatio, PathPairConvergesToOne) {
    Graph g = testkit::generate("path:4");
    const Vertex b = g.require("b"), c = g.require("c");
    const Vertex targets[] = {b, c};
    JointChainTrace trace = run_joint_chain(g, targets, 200000, 9);
    EXPECT_NEAR(estimate_betweenness_ratio(trace, b, c), 1.0, 0.02);
    EXPECT_EQ(estimate_betweenness_ratio(trace, b, b), 1.0);
}

TEST(EstimateBetweennessRatio, DegenerateStarPair) {
    Graph g = testkit::generate("star:5");
    const Vertex center = g.require("c"), leaf = g.require("l1");
    const Vertex targets[] = {center, leaf};

    // seed 5: the leaf stratum stays empty, the estimate is unavailable
    JointChainTrace empty = run_joint_chain(g, targets, 2000, 5);
    EXPECT_EQ(empty.strata[1].size(), 0u);
    EXPECT_THROW(estimate_relative_betweenness(empty, center, leaf), EmptyStratumError);
    EXPECT_THROW(estimate_betweenness_ratio(empty, center, leaf), EmptyStratumError);

    // seed 1: the start state lands in the leaf stratum, so the numerator
    // exists but the reverse direction is identically zero (true ratio is
    // infinite: the leaf has zero betweenness).
    JointChainTrace started = run_joint_chain(g, targets, 2000, 1);
    EXPECT_GT(started.strata[1].size(), 0u);
    EXPECT_EQ(estimate_relative_betweenness(started, leaf, center), 0.0);
    EXPECT_THROW(estimate_betweenness_ratio(started, center, leaf), ZeroDenominatorError);
}

TEST(RelativeReport, MarksUnestimableDirections) {
    Graph g = testkit::generate("star:5");
    const Vertex center = g.require("c"), leaf = g.require("l1");
    const Vertex targets[] = {center, leaf};

    JointChainTrace empty = run_joint_chain(g, targets, 2000, 5);
    RelativeScoreReport report = relative_report(empty, center, leaf);
    EXPECT_EQ(report.samples_j, 0u);
    EXPECT_FALSE(report.rel_ij.has_value());
    EXPECT_TRUE(report.rel_ji.has_value());
    EXPECT_FALSE(report.ratio.has_value());

    Graph p4 = testkit::generate("path:4");
    const Vertex pair[] = {p4.require("b"), p4.require("c")};
    JointChainTrace ok = run_joint_chain(p4, pair, 5000, 3);
    report = relative_report(ok, pair[0], pair[1]);
    ASSERT_TRUE(report.ratio.has_value());
    EXPECT_EQ(report.samples_i + report.samples_j, ok.states.size());
}

TEST(RatioIdentity, PathPairIsExact) {
    Graph g = testkit::generate("path:4");
    auto [lhs, rhs] = betweenness_ratio_identity(g, g.require("b"), g.require("c"));
    EXPECT_EQ(lhs, 1.0);
    EXPECT_EQ(rhs, 1.0);
}

TEST(RatioIdentity, BarbellBridgeVertices) {
    Graph g = testkit::generate("barbell:5:2");
    auto [lhs, rhs] = betweenness_ratio_identity(g, g.require("r1"), g.require("r2"));
    EXPECT_NEAR(lhs, rhs, 1e-9);
    EXPECT_NEAR(lhs, 1.0, 1e-12);  // symmetric construction

    auto [lhs2, rhs2] = betweenness_ratio_identity(g, g.require("a0"), g.require("r1"));
    EXPECT_NEAR(lhs2, rhs2, 1e-9);
    // the gate separates 4 from 7 vertices, the bridge vertex 5 from 6
    EXPECT_NEAR(lhs2, 28.0 / 30.0, 1e-12);
}

TEST(RatioIdentity, HoldsOnSeededRandomGraphs) {
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = testkit::generate("gnp:" + std::to_string(4 + seed % 7) + ":0.4:" + std::to_string(seed));
        const BetweennessVector bc = exact_betweenness(g);
        for (Vertex i = 0; i < g.vertex_count(); ++i) {
            for (Vertex j = i + 1; j < g.vertex_count(); ++j) {
                if (bc.values[i] == 0.0 || bc.values[j] == 0.0) continue;
                try {
                    auto [lhs, rhs] = betweenness_ratio_identity(g, i, j);
                    ASSERT_NEAR(lhs, rhs, 1e-9) << "seed " << seed;
                    ++checked;
                } catch (const InvalidParameterError&) {
                    // disjoint dependency supports: the ratio form degenerates
                }
            }
        }
    }
    EXPECT_GT(checked, 50);
}

TEST(RatioIdentity, RejectsZeroBetweenness) {
    Graph g = testkit::generate("star:5");
    EXPECT_THROW(betweenness_ratio_identity(g, g.require("c"), g.require("l1")), InvalidParameterError);
}

// The zero conventions keep the summed balance identity intact: both weighted
// sums collapse to sum_v min(delta_i, delta_j).
TEST(CappedRatioConventions, PreserveTheBalanceIdentity) {
    for (const char* spec : {"path:6", "cycle:6", "star:6", "two_blocks_cut:3:3", "gnp:8:0.4:17"}) {
        Graph g = testkit::generate(spec);
        const std::size_t n = g.vertex_count();
        std::vector<std::vector<double>> dep(n);
        DependencyWorkspace ws;
        for (Vertex v = 0; v < n; ++v) dep[v] = ws.compute(g, v);
        for (Vertex i = 0; i < n; ++i) {
            for (Vertex j = 0; j < n; ++j) {
                double forward = 0.0, backward = 0.0, overlap = 0.0;
                for (Vertex v = 0; v < n; ++v) {
                    forward += dep[v][i] * capped_ratio(dep[v][j], dep[v][i]);
                    backward += dep[v][j] * capped_ratio(dep[v][i], dep[v][j]);
                    overlap += std::min(dep[v][i], dep[v][j]);
                }
                ASSERT_NEAR(forward, backward, 1e-12) << spec;
                ASSERT_NEAR(forward, overlap, 1e-12) << spec;
            }
        }
    }
}

TEST(EstimateRelativeBetweenness, StaysInUnitInterval) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Graph g = testkit::generate("gnp:9:0.4:" + std::to_string(seed));
        const Vertex targets[] = {0, 3, 7};
        try {
            JointChainTrace trace = run_joint_chain(g, targets, 400, seed);
            for (Vertex i : targets) {
                for (Vertex j : targets) {
                    try {
                        const double estimate = estimate_relative_betweenness(trace, i, j);
                        ASSERT_GE(estimate, 0.0);
                        ASSERT_LE(estimate, 1.0);
                    } catch (const EmptyStratumError&) {
                    }
                }
            }
        } catch (const AllZeroDependencyError&) {
        }
    }
}

TEST(RequiredSamplesJoint, MatchesSingleSpacePlanner) {
    EXPECT_EQ(required_samples_joint(0.1, 0.05, 1.25), 289u);
    EXPECT_EQ(required_samples_joint(0.5, 0.5, 1.0), 3u);
    // doubling epsilon quarters the bound before rounding
    EXPECT_EQ(required_samples_bound(0.2, 0.05, 1.25), required_samples_bound(0.1, 0.05, 1.25) / 4.0);
}

TEST(PlannedTotalIterations, ScalesByInverseStratumShare) {
    Graph g = testkit::generate("path:4");
    const Vertex targets[] = {g.require("b"), g.require("c")};
    // both strata carry half the joint mass, so the total doubles the budget
    EXPECT_EQ(planned_total_iterations(g, targets, g.require("c"), 100), 200u);
    EXPECT_THROW(planned_total_iterations(g, targets, g.require("a"), 100), InvalidParameterError);
    EXPECT_THROW(planned_total_iterations(g, targets, g.require("c"), 0), InvalidParameterError);
}

TEST(JointKernel, TargetDistributionIsAFixedPoint) {
    Graph g = testkit::generate("path:4");
    const Vertex targets[] = {g.require("b"), g.require("c")};
    const testkit::KernelMatrix kernel = testkit::joint_space_kernel(g, targets);
    EXPECT_LT(testkit::stationarity_residual(kernel), 1e-12);
    EXPECT_LT(testkit::detailed_balance_residual(kernel), 1e-12);

    // stratum mass of b is half of the joint mass
    double stratum_mass = 0.0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) stratum_mass += kernel.target[v];
    EXPECT_EQ(stratum_mass, 0.5);
}

}  // namespace
}  // namespace bcmc
