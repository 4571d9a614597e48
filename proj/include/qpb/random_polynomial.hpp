#pragma once

#include <cstdint>

#include "qpb/companion.hpp"

namespace qpb {

// splitmix64, frozen as an external contract so seeds mean the same thing
// forever: state advances by 0x9E3779B97F4A7C15 per draw, output runs through
// the 30/27/31-shift finalizer with multipliers 0xBF58476D1CE4E5B9 and
// 0x94D049BB133111EB. README carries reference outputs.
struct SplitMix64 {
  std::uint64_t state;

  explicit constexpr SplitMix64(std::uint64_t seed) : state(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Top 53 bits to [0, 1), the standard uniform double construction.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }
};

// Monic random polynomial with entries component-uniform in [-scale, scale].
// Draw order is part of the contract: coefficients low to high, entries
// row-major within each block, components w, x, y, z within each entry.
MatrixPolynomial random_polynomial(Index k, Index n, std::uint64_t seed, double scale);

}  // namespace qpb
