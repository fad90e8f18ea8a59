#ifndef BCMC_TESTKIT_BRUTE_FORCE_HPP
#define BCMC_TESTKIT_BRUTE_FORCE_HPP

#include <cstdint>

#include "bcmc/brandes.hpp"
#include "bcmc/graph.hpp"

namespace bcmc::testkit {

/// Largest graph the exhaustive oracles accept. Hard error beyond this, so
/// CI costs stay bounded.
inline constexpr std::size_t kBruteForceLimit = 12;

/// Ground-truth betweenness by full shortest-path enumeration: Floyd-Warshall
/// distances, then a DFS over tight edges lists every shortest path of every
/// ordered pair and counts interior visits. Shares no code with the
/// dependency-accumulation path it cross-checks. Throws TooLargeError past
/// kBruteForceLimit.
BetweennessVector brute_force_betweenness(const Graph& g);

/// Number of shortest s-t paths, by the same enumeration.
std::uint64_t brute_force_path_count(const Graph& g, Vertex s, Vertex t);

}  // namespace bcmc::testkit

#endif  // BCMC_TESTKIT_BRUTE_FORCE_HPP
