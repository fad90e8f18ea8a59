#include "bcmc/testkit/kernel.hpp"

#include <cmath>
#include <vector>

#include "bcmc/brandes.hpp"

namespace bcmc::testkit {

namespace {

KernelMatrix assemble(const std::vector<double>& scores, double proposal_mass) {
    const std::size_t m = scores.size();
    double total = 0.0;
    for (double s : scores) total += s;
    if (total == 0.0) {
        throw AllZeroDependencyError("every state has zero dependency; the target distribution is undefined");
    }

    KernelMatrix kernel;
    kernel.size = m;
    kernel.transition.assign(m * m, 0.0);
    kernel.target.resize(m);
    for (std::size_t x = 0; x < m; ++x) kernel.target[x] = scores[x] / total;

    for (std::size_t x = 0; x < m; ++x) {
        double off_diagonal = 0.0;
        for (std::size_t y = 0; y < m; ++y) {
            if (y == x) continue;
            const double p = proposal_mass * capped_ratio(scores[y], scores[x]);
            kernel.transition[x * m + y] = p;
            off_diagonal += p;
        }
        kernel.transition[x * m + x] = 1.0 - off_diagonal;
    }
    return kernel;
}

}  // namespace

KernelMatrix single_space_kernel(const Graph& g, Vertex r) {
    const std::size_t n = g.vertex_count();
    if (n > 8) throw TooLargeError("single-space kernels are limited to 8 vertices");
    if (r >= n) throw InvalidParameterError("target vertex out of range");

    DependencyWorkspace ws;
    std::vector<double> scores(n);
    for (Vertex v = 0; v < n; ++v) scores[v] = ws.compute(g, v)[r];
    return assemble(scores, 1.0 / static_cast<double>(n));
}

KernelMatrix joint_space_kernel(const Graph& g, std::span<const Vertex> targets) {
    const std::size_t n = g.vertex_count();
    const std::size_t k = targets.size();
    if (k < 2) throw InvalidParameterError("target set must have at least 2 vertices");
    if (k * n > 32) throw TooLargeError("joint kernels are limited to 32 states");
    for (Vertex r : targets) {
        if (r >= n) throw InvalidParameterError("target vertex out of range");
    }

    DependencyWorkspace ws;
    std::vector<double> scores(k * n);
    for (Vertex v = 0; v < n; ++v) {
        const std::vector<double>& dep = ws.compute(g, v);
        for (std::size_t i = 0; i < k; ++i) scores[i * n + v] = dep[targets[i]];
    }
    return assemble(scores, 1.0 / static_cast<double>(k * n));
}

double stationarity_residual(const KernelMatrix& kernel) {
    const std::size_t m = kernel.size;
    double residual = 0.0;
    for (std::size_t y = 0; y < m; ++y) {
        double mass = 0.0;
        for (std::size_t x = 0; x < m; ++x) mass += kernel.target[x] * kernel.at(x, y);
        residual = std::max(residual, std::abs(mass - kernel.target[y]));
    }
    return residual;
}

double detailed_balance_residual(const KernelMatrix& kernel) {
    const std::size_t m = kernel.size;
    double residual = 0.0;
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = x + 1; y < m; ++y) {
            residual = std::max(residual, std::abs(kernel.target[x] * kernel.at(x, y) -
                                                   kernel.target[y] * kernel.at(y, x)));
        }
    }
    return residual;
}

double row_sum_residual(const KernelMatrix& kernel) {
    const std::size_t m = kernel.size;
    double residual = 0.0;
    for (std::size_t x = 0; x < m; ++x) {
        double row = 0.0;
        for (std::size_t y = 0; y < m; ++y) row += kernel.at(x, y);
        residual = std::max(residual, std::abs(row - 1.0));
    }
    return residual;
}

}  // namespace bcmc::testkit
