#pragma once

/// @file
/// @brief Counter-based deterministic random numbers for seeded initial conditions.
///
/// Draw i depends only on (seed, stream, i), so sampling is bit-reproducible
/// across platforms and independent of call order. The generator name and
/// version are recorded in benchmark records; bump kVersion if the mixing
/// function ever changes.

#include <cstdint>

namespace pbb {

/// SplitMix64 finalizer applied to a Weyl sequence over the counter.
class CounterRng {
 public:
  static constexpr const char* kName = "splitmix64-counter";
  static constexpr int kVersion = 1;

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : base_(mix(seed ^ (stream * 0x9e3779b97f4a7c15ull) ^ 0x7f4a7c15ull)) {}

  std::uint64_t bits(std::uint64_t counter) const {
    return mix(base_ + counter * 0x9e3779b97f4a7c15ull);
  }

  /// Uniform double in [0, 1) with 53 significant bits.
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  double uniform(std::uint64_t counter, double lo, double hi) const {
    return lo + (hi - lo) * uniform(counter);
  }

  /// Uniform integer in [lo, hi], both ends inclusive.
  std::int64_t uniform_int(std::uint64_t counter, std::int64_t lo, std::int64_t hi) const {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(bits(counter) % span);
  }

 private:
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t base_;
};

}  // namespace pbb
