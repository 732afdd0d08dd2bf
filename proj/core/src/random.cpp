// SPDX-License-Identifier: Apache-2.0
#include "fbsynth/random.hpp"

#include <cmath>

#include "fbsynth/error.hpp"

namespace fbsynth {

__extension__ using u128 = unsigned __int128;

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(Errc::domain, "Rng::below(0)");
  // Lemire's multiply-shift with rejection; unbiased.
  u128 m = static_cast<u128>((*this)()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<u128>((*this)()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(Errc::domain, "uniform_int: hi < lo");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>((*this)());
  return lo + static_cast<std::int64_t>(below(span + 1));
}

double Rng::unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) {
  if (hi < lo) throw Error(Errc::domain, "uniform: hi < lo");
  if (lo == hi) return lo;
  const double v = lo + (hi - lo) * unit();
  return v > hi ? hi : v;
}

std::size_t Rng::weighted(std::span<const double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw Error(Errc::domain, "negative weight");
    total += w;
  }
  if (total <= 0.0) throw Error(Errc::domain, "weights sum to zero");
  const double target = unit() * total;
  double acc = 0.0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    acc += weights[i];
    last = i;
    if (target < acc) return i;
  }
  return last;
}

SeedStream::SeedStream(std::uint64_t master_seed) : master_(master_seed), key_(mix64(master_seed ^ 0x6a09e667f3bcc909ull)) {}

SeedStream SeedStream::child(std::uint64_t index) const {
  SeedStream out = *this;
  out.path_.push_back(index);
  out.key_ = mix64(key_ ^ mix64(index + 0x9e3779b97f4a7c15ull));
  return out;
}

}  // namespace fbsynth
