#pragma once

#include <cstdint>
#include <random>

namespace testutil {

// Deterministic generator so failures reproduce.
inline std::mt19937_64 make_rng(std::uint64_t seed = 0x5eed5eedULL) {
    return std::mt19937_64(seed);
}

inline std::int64_t rand_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> d(lo, hi);
    return d(rng);
}

} // namespace testutil
