#ifndef BCMC_TESTKIT_VERIFY_HPP
#define BCMC_TESTKIT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace bcmc::testkit {

/// One named assertion with the measured quantity and its pinned threshold.
struct Check {
    std::string name;
    bool pass = false;
    double observed = 0.0;
    double threshold = 0.0;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    bool all_pass() const {
        for (const Check& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
};

/// Exact betweenness against the enumeration oracle on the deterministic
/// families (n <= 12) and 100 seeded random graphs, plus closed-form spot
/// checks (star centers, path middle, cycle).
SuiteReport verify_oracle(std::uint64_t seed);

/// Stationarity, detailed balance and row-stochasticity of the exact
/// single-space and joint kernels on every small suite graph, residuals
/// below 1e-12.
SuiteReport verify_kernel();

/// The betweenness-ratio identity, checked deterministically on 100 seeded
/// random graphs for every pair with positive betweenness (1e-9).
SuiteReport verify_theorem2(std::uint64_t seed);

/// Concentration witnesses: the cut vertex of two equal blocks keeps mu
/// bounded by a constant while n grows, and star centers match n/(n-1).
SuiteReport verify_theorem3();

/// Replicated (epsilon, delta) coverage of the single-space estimator on
/// star:8 and two_blocks_cut:5:5 and of the joint relative estimator on
/// path:8, 200 seeded runs each, failure fraction within binomial slack.
SuiteReport verify_coverage(std::uint64_t seed);

}  // namespace bcmc::testkit

#endif  // BCMC_TESTKIT_VERIFY_HPP
