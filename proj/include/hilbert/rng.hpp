#pragma once

#include <cstdint>
#include <random>

namespace hilbert::rng {

// splitmix64 mixing step; used to derive independent substream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Substream engine for batch `index` of a run seeded with `seed`.
// mt19937_64 is pinned by the standard, so identical seeds reproduce
// identical streams.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed;
    splitmix64(s);
    s ^= 0xD1B54A32D192ED03ULL * (index + 1);
    return std::mt19937_64(splitmix64(s));
}

// Uniform in [0, 1) built from the raw 64-bit output; avoids
// implementation-defined distribution internals.
inline double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Standard exponential via inversion.
inline double exponential(std::mt19937_64& eng) {
    return -std::log1p(-uniform01(eng));
}

}  // namespace hilbert::rng
