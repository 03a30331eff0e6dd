#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>

namespace polysamp {

/// Seedable randomness source. Identical seed gives an identical stream
/// within one build; cross-build stream equality is not promised.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed);

  /// Uniform double in [0,1) with 53-bit resolution.
  double uniform_real();

  /// Exactly uniform integer in [0, bound); bound >= 1. No modulo bias.
  std::uint64_t uniform_int(std::uint64_t bound);

  /// True with probability p (double mode). p is clamped to [0,1].
  bool bernoulli(double p);

  /// Exact Bernoulli for rational p in [0,1]: compares random bits against
  /// the binary expansion of p, consuming two bits in expectation.
  bool bernoulli_rational(const mpq_class& p);

  bool random_bit();

  /// Derived stream for shard `index`; statistically independent of this one.
  RandomSource split(std::uint64_t index) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
  std::uint64_t bit_buffer_ = 0;
  int bits_left_ = 0;
};

}  // namespace polysamp
