#pragma once

#include <cstdint>
#include <random>

namespace acs_test {

// Seed given on the command line as --seed=N (default 1).
std::uint64_t seed();

// Fresh generator per test, salted so tests do not share streams.
inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline long uniform(std::mt19937_64& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

}  // namespace acs_test
