#ifndef BCMC_TESTKIT_GENERATORS_HPP
#define BCMC_TESTKIT_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "bcmc/graph.hpp"

namespace bcmc::testkit {

enum class GraphFamily {
    path,            // path:n            labels a, b, c, ...
    cycle,           // cycle:n
    star,            // star:n            center "c", leaves l1..l{n-1}
    complete,        // complete:n
    barbell,         // barbell:k:bridge  two K_k joined by a path of `bridge` vertices r1..
    two_blocks_cut,  // two_blocks_cut:k1:k2  cut vertex "r" adjacent to two cliques
    gnp,             // gnp:n:p:seed      labels v0..; retried until connected
};

struct GeneratorSpec {
    GraphFamily family = GraphFamily::path;
    std::size_t n = 0;       // path/cycle/star/complete/gnp
    std::size_t k1 = 0;      // barbell clique size, two_blocks_cut first block
    std::size_t k2 = 0;      // two_blocks_cut second block
    std::size_t bridge = 0;  // barbell bridge length (number of bridge vertices)
    double p = 0.0;          // gnp edge probability
    std::uint64_t seed = 0;  // gnp
};

/// Parses colon-separated spec strings such as "star:5", "gnp:8:0.4:7",
/// "two_blocks_cut:5:5" or "barbell:5:2". Throws InvalidParameterError.
GeneratorSpec parse_generator_spec(std::string_view text);

/// The spec string for a parsed GeneratorSpec (round-trips parse_generator_spec).
std::string to_string(const GeneratorSpec& spec);

/// Deterministic construction: the same spec always yields the same graph.
/// gnp draws edges from a seeded stream and retries with derived sub-seeds
/// (at most 1000) until the sample is connected.
Graph generate(const GeneratorSpec& spec);

/// parse + generate.
Graph generate(std::string_view spec_text);

}  // namespace bcmc::testkit

#endif  // BCMC_TESTKIT_GENERATORS_HPP
