#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace fileclass::detail {

// std::mt19937_64 output is fully specified by the standard; the helpers
// below avoid std distributions, whose mappings are implementation
// defined, so seeded runs are reproducible across toolchains.

inline std::uint64_t next_u64(std::mt19937_64& rng) { return rng(); }

/// Unbiased integer in [0, n) via rejection sampling.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t bound = n;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(std::mt19937_64& rng, double p) {
  return uniform_real(rng) < p;
}

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = uniform_index(rng, i);
    std::swap(items[i - 1], items[j]);
  }
}

template <typename Range>
const auto& pick(std::mt19937_64& rng, const Range& range) {
  return range[uniform_index(rng, std::size(range))];
}

}  // namespace fileclass::detail
