#pragma once

#include <cstdint>
#include <random>

namespace maxcut::rng {

// The random stream used by the solver is part of its reproducibility
// contract: a single std::mt19937_64 engine seeded directly with the run
// seed, consumed through the two mappings below. mt19937_64 output is
// pinned by the C++ standard, so identical seeds give identical streams
// on every conforming platform.

using Engine = std::mt19937_64;

/// Uniform integer in [0, bound). Lemire multiply-shift with rejection;
/// exactly uniform, consumes a variable (usually 1) number of engine draws.
inline std::uint64_t bounded(Engine& eng, std::uint64_t bound) {
  using u128 = unsigned __int128;
  std::uint64_t x = eng();
  u128 m = static_cast<u128>(x) * bound;
  auto lo = static_cast<std::uint64_t>(m);
  if (lo < bound) {
    std::uint64_t threshold = -bound % bound;
    while (lo < threshold) {
      x = eng();
      m = static_cast<u128>(x) * bound;
      lo = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform01(Engine& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace maxcut::rng
