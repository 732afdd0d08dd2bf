// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace fbsynth {

/// SplitMix64 finalizer; also the per-draw output function of Rng.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Sequential generator over one stream key. Satisfies
/// UniformRandomBitGenerator, but the helpers below are preferred over
/// <random> distributions, whose output differs between standard libraries.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t key) : state_(key) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return mix64(state_ += 0x9e3779b97f4a7c15ull); }

  /// Uniform in [0, bound); bound must be > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform double in [0, 1).
  double unit();
  /// Uniform double in [lo, hi]; returns lo when lo == hi.
  double uniform(double lo, double hi);
  bool bernoulli(double p) { return unit() < p; }
  /// Index drawn proportionally to non-negative weights.
  std::size_t weighted(std::span<const double> weights);

 private:
  std::uint64_t state_;
};

/// Splittable seed: a master seed plus a derivation path. Children are pure
/// functions of (master, path, index), so work keyed by path can run in any
/// order on any thread with unchanged results.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t master_seed);

  std::uint64_t master_seed() const { return master_; }
  const std::vector<std::uint64_t>& path() const { return path_; }
  std::uint64_t key() const { return key_; }

  SeedStream child(std::uint64_t index) const;
  Rng engine() const { return Rng(key_); }

  friend bool operator==(const SeedStream&, const SeedStream&) = default;

 private:
  std::uint64_t master_;
  std::vector<std::uint64_t> path_;
  std::uint64_t key_;
};

inline SeedStream derive_stream(const SeedStream& seed, std::uint64_t index) { return seed.child(index); }

}  // namespace fbsynth
