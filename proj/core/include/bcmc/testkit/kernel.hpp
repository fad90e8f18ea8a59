#ifndef BCMC_TESTKIT_KERNEL_HPP
#define BCMC_TESTKIT_KERNEL_HPP

#include <span>
#include <vector>

#include "bcmc/graph.hpp"

namespace bcmc::testkit {

/// Exact transition matrix of a sampler on a small state space, next to the
/// distribution the sampler is meant to leave invariant. Row-stochastic by
/// construction; target sums to 1 over its support and is 0 off-support.
struct KernelMatrix {
    std::size_t size = 0;
    std::vector<double> transition;  // row-major, size x size
    std::vector<double> target;

    double at(std::size_t row, std::size_t col) const { return transition[row * size + col]; }
};

/// Single-space sampler kernel over V(G) for target r. States are vertex
/// indices. Guarded to n <= 8 (TooLargeError); throws AllZeroDependencyError
/// when the target distribution is undefined.
KernelMatrix single_space_kernel(const Graph& g, Vertex r);

/// Joint sampler kernel over R x V(G); state index = stratum * n + source.
/// Guarded to |R| * n <= 32.
KernelMatrix joint_space_kernel(const Graph& g, std::span<const Vertex> targets);

/// max_j |(pi P)_j - pi_j|
double stationarity_residual(const KernelMatrix& kernel);

/// max over state pairs of |pi_i P_ij - pi_j P_ji|
double detailed_balance_residual(const KernelMatrix& kernel);

/// max_i |sum_j P_ij - 1|
double row_sum_residual(const KernelMatrix& kernel);

}  // namespace bcmc::testkit

#endif  // BCMC_TESTKIT_KERNEL_HPP
