#ifndef BCMC_RNG_HPP
#define BCMC_RNG_HPP

#include <cstdint>
#include <limits>
#include <string_view>

#include "bcmc/errors.hpp"

namespace bcmc {

/// splitmix64: a tiny splittable 64-bit generator with a fully portable,
/// platform-independent output sequence. Used everywhere a seed appears so
/// that identical seeds reproduce identical runs on any build.
///
/// Streams are split by mixing a stream id into the seed (see derive); the
/// samplers use stream 0 for proposals and stream 1 for acceptance coins.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr std::string_view algorithm_name = "splitmix64";

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Independent stream deterministically derived from (seed, stream).
    static SplitMix64 derive(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 mixer(seed ^ (0xd1b54a32d192ed03ULL * (stream + 1)));
        return SplitMix64(mixer.next());
    }

    /// Uniform draw from {0, 1, ..., n-1}, bias-free via rejection.
    std::uint64_t uniform_index(std::uint64_t n) {
        if (n == 0) throw InvalidParameterError("uniform_index: n must be positive");
        const std::uint64_t rem = std::numeric_limits<std::uint64_t>::max() % n;
        if (rem == n - 1) return next() % n;  // n divides 2^64
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - rem;
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % n;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // UniformRandomBitGenerator interface
    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()() { return next(); }

private:
    std::uint64_t state_;
};

}  // namespace bcmc

#endif  // BCMC_RNG_HPP
