#pragma once

#include <cstdint>
#include <random>

namespace subsum {

// Draws uniformly from [0, bound) with rejection sampling, so the
// distribution is exactly uniform and the draw sequence depends only on
// the engine state, never on platform distribution internals.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound) {
  // 2^64 mod bound values at the low end would be over-represented by a
  // plain modulo, so reject raw draws below that threshold.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t raw = rng();
    if (raw >= threshold) return raw % bound;
  }
}

// Deterministic stream-splitting mix: derives an independent seed from a
// base seed and a pair of coordinates (splitmix64 finalizer).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (a + 1) + 0xbf58476d1ce4e5b9ull * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace subsum
