#pragma once

#include <cstdint>
#include <random>

namespace mrsc {

// All randomness in the library flows through one of these, seeded from a
// single caller-supplied 64-bit value so runs are reproducible.
using Rng = std::mt19937_64;

// Unbiased draw from [0, bound). bound must be nonzero.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

} // namespace mrsc
