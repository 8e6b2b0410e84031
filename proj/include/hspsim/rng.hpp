// Deterministic randomness. Every stochastic routine takes an explicit
// std::mt19937_64 so that a fixed seed reproduces a run bit for bit.
// Independent trials use streams derived by splitmix64 mixing, so trial k of
// seed s gives the same results no matter how trials are scheduled.
#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "hspsim/errors.hpp"

namespace hspsim {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Stream for trial `index` under user seed `seed`.
inline Rng derive_stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(seed ^ splitmix64(index)));
}

// Uniform integer in [0, n) by rejection; identical on every platform, unlike
// std::uniform_int_distribution.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    if (n == 0) throw RangeError("uniform_below: n must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

// Draw an index from an unnormalized nonnegative weight vector.
inline std::size_t sample_discrete(Rng& rng, std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    if (total <= 0.0) throw RangeError("sample_discrete: all weights are zero");
    double u = uniform01(rng) * total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        u -= weights[i];
        if (u < 0.0) return i;
    }
    return weights.size() - 1;  // rounding fell off the end
}

}  // namespace hspsim
