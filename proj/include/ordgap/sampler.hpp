#pragma once

#include <cstdint>

#include "ordgap/ring.hpp"

namespace ordgap {

/// 64-bit linear congruential generator, state' = a*state + c (mod 2^64),
/// with Knuth's MMIX constants. Outputs are taken from the high bits. The
/// constants below fully determine every sampled stream, independent of the
/// standard library in use.
class Lcg64 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * kMultiplier + kIncrement;
    return state_;
  }

  /// Uniform integer in [lo, hi]; hi - lo must be below 2^32. Rejection
  /// sampling on the top 32 bits of each step.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

/// Size bounds of the sampled elements.
struct SamplerBounds {
  static constexpr std::int64_t kMagnitude = 1000;   // INT range, RAT numerator range
  static constexpr std::int64_t kDenominator = 50;   // RAT/ODDRAT denominators in [1, 50]
  static constexpr std::uint32_t kPolyDegree = 4;
  static constexpr std::uint32_t kSkewDegree = 3;    // n, m <= 3
  static constexpr std::int64_t kSkewTerms = 5;      // 1..5 terms
};

/// Pseudorandom element of `ring` drawn from `rng`.
Element sample(RingId ring, Lcg64& rng);
/// abs(sample(ring, rng)): a nonnegative element.
Element sample_nonneg(RingId ring, Lcg64& rng);

}  // namespace ordgap
