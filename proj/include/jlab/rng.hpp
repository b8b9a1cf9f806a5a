#pragma once

#include <cstdint>

namespace jlab {

// SplitMix64. Used instead of <random> distributions because their output
// is implementation-defined; sampled results must be identical everywhere.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform on [0, bound) by rejection; bound > 0
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % bound;
    }
};

// Per-trial stream derived from (seed, trial); schedule-independent.
inline SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 mixer(seed + 0x9E3779B97F4A7C15ULL * (trial + 1));
    return SplitMix64(mixer.next());
}

} // namespace jlab
