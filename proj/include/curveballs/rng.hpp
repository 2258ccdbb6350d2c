#pragma once

#include <cstdint>
#include <random>

namespace curveballs {

// All randomness in the library flows through mt19937_64 plus the two
// mappings below, so seeded runs reproduce bit-identically across
// platforms (std::uniform_*_distribution is implementation-defined and is
// deliberately not used).
inline constexpr const char* kSamplerId = "mt19937_64+rejection";

using Rng = std::mt19937_64;

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(rng);
}

// Unbiased integer in [0, n) by rejection.
inline std::uint64_t bounded(Rng& rng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t x = rng();
        if (x >= threshold) return x % n;
    }
}

} // namespace curveballs
