#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace blockforge {

/// Uniform draw from [0, n) by rejection. std::uniform_int_distribution is
/// implementation-defined, which would make seeded runs differ across
/// standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - kMax % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

}  // namespace blockforge
