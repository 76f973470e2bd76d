// Copyright 2026 The prqc developers.
//
// This source code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of the license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <random>

namespace prqc {

/// Derives an independent child seed from (seed, index). One SplitMix64 step
/// on a per-index stream offset; this is the documented derivation used for
/// per-trial seeding throughout the library, so ensemble results never depend
/// on evaluation order.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Reserved mix_seed indices (outside the trial-index range, which is < 2^32).
inline constexpr std::uint64_t kNoiseSeedIndex = ~0ULL;      // coherent-noise generator
inline constexpr std::uint64_t kCueReferenceIndex = ~0ULL - 1;  // internal Haar reference batch

/// Deterministic pseudo-random source with 64-bit seed. Equal seeds give
/// bit-identical draw sequences within one build of the library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal deviate.
  double normal() { return normal_(engine_); }

  /// Child generator for trial `index`; see mix_seed.
  Rng child(std::uint64_t index) const { return Rng(mix_seed(seed_, index)); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace prqc
