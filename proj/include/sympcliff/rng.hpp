#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "sympcliff/scalars.hpp"

namespace sympcliff {

/// xoshiro256** (Blackman & Vigna), seeded through splitmix64.
///
/// Chosen over the <random> engines + distributions because the latter are
/// not bit-reproducible across standard library implementations, and verify
/// reports must be byte-identical for a given seed.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform integer in [lo, hi], unbiased (rejection sampling).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::array<std::uint64_t, 4> s_{};
};

/// Derives an independent stream seed from a suite seed and a check name.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view name);

/// Random rational with |numerator| <= max_num and denominator in [1, max_den].
Rational random_rational(Xoshiro256& rng, std::int64_t max_num = 12, std::int64_t max_den = 6);
/// Like random_rational but never zero.
Rational random_nonzero_rational(Xoshiro256& rng, std::int64_t max_num = 12, std::int64_t max_den = 6);
GaussianRational random_gaussian(Xoshiro256& rng);

}  // namespace sympcliff
