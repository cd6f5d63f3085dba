#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace swarmsim {

/// SplitMix64 finalizer. Used to expand seeds and to derive independent child
/// seeds; part of the reproducibility contract, so it must never change.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Stable derivation of a child seed from a base seed and up to two indices
/// (sweep run = (point_id, rep), forest tree = (tree_index)). Any single
/// child stream can be reconstructed without touching its siblings.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                    std::uint64_t b = 0) noexcept {
  std::uint64_t h = mix64(base ^ (0x9E3779B97F4A7C15ull * (a + 1)));
  return mix64(h ^ (0xC2B2AE3D27D4EB4Full * (b + 1)));
}

/// Deterministic pseudo-random stream (xoshiro256++). Each simulation run
/// owns exactly one; identical seeds give identical draw sequences on every
/// platform, which standard-library distributions do not guarantee.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) noexcept { reseed(seed); }

  void reseed(std::uint64_t seed) noexcept {
    // SplitMix64 expansion of the seed into the state, per the xoshiro
    // authors' recommendation; never yields the all-zero state.
    std::uint64_t x = seed;
    for (auto& word : state_) {
      x += 0x9E3779B97F4A7C15ull;
      word = mix64(x);
    }
  }

  std::uint64_t next_u64() noexcept {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform real in [0, 1) with 53-bit resolution.
  double uniform01() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Unbiased uniform integer in [0, bound); bound must be > 0.
  std::uint64_t uniform_int(std::uint64_t bound) noexcept {
    // Rejection below 2^64 mod bound, then reduce (arc4random_uniform style).
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t x = next_u64();
    while (x < threshold) x = next_u64();
    return x % bound;
  }

  /// Normal draw via Box-Muller. Consumes exactly two uniforms per call, so
  /// the stream position never depends on the drawn values.
  double normal(double mean, double stddev) noexcept {
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * radius * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t v, int k) noexcept {
    return (v << k) | (v >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace swarmsim
