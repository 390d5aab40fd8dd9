#pragma once

#include <cmath>
#include <cstdint>

// Deterministic counter-style RNG. Distribution draws are hand-rolled so a
// fixed seed reproduces files bit-for-bit independent of the standard
// library's distribution implementations.

namespace bohmrad {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t s) : state(s) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double uniform01() {  // in (0, 1]
        return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
    }

    double normal() {  // Box-Muller
        const double u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }
};

// independent substream for one item of a seeded run
inline SplitMix64 rng_stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
    mix.next();
    mix.next();
    return mix;
}

}  // namespace bohmrad
