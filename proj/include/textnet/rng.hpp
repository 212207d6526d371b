#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "textnet/types.hpp"

namespace textnet {

// mt19937_64 output is specified bit-for-bit by the standard, so every
// derived draw below is reproducible across platforms. Standard-library
// distributions are not; we roll the few transforms we need instead.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Independent seed for a numbered substream (per evaluation run, per phase).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master ^ splitmix64(stream + 0x9E3779B97F4A7C15ULL));
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Unbiased uniform integer in [0, n), n > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

/// Standard normal via Box-Muller (cosine branch only).
inline double standard_normal(Rng& rng) {
  const double u1 = 1.0 - uniform01(rng);  // (0, 1], keeps log finite
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// Gaussian with mean 0 and the given stddev, resampled until the draw
/// falls within +-2 stddev.
inline double truncated_normal(Rng& rng, double stddev) {
  double z = standard_normal(rng);
  while (std::abs(z) > 2.0) z = standard_normal(rng);
  return stddev * z;
}

/// Vose alias table: O(n) build, O(1) exact draws from a fixed discrete
/// distribution proportional to the given non-negative weights.
class AliasTable {
 public:
  AliasTable() = default;

  explicit AliasTable(const std::vector<double>& weights) {
    const std::size_t n = weights.size();
    prob_.assign(n, 0.0);
    alias_.assign(n, 0);
    double total = 0.0;
    for (double w : weights) total += w;
    if (n == 0 || total <= 0.0) return;

    std::vector<double> scaled(n);
    for (std::size_t i = 0; i < n; ++i) scaled[i] = weights[i] * static_cast<double>(n) / total;

    std::vector<std::size_t> small, large;
    for (std::size_t i = 0; i < n; ++i) {
      (scaled[i] < 1.0 ? small : large).push_back(i);
    }
    while (!small.empty() && !large.empty()) {
      const std::size_t s = small.back();
      const std::size_t l = large.back();
      small.pop_back();
      large.pop_back();
      prob_[s] = scaled[s];
      alias_[s] = static_cast<int>(l);
      scaled[l] = (scaled[l] + scaled[s]) - 1.0;
      (scaled[l] < 1.0 ? small : large).push_back(l);
    }
    for (std::size_t l : large) prob_[l] = 1.0;
    for (std::size_t s : small) prob_[s] = 1.0;  // numerical leftovers
  }

  bool empty() const { return prob_.empty(); }

  int sample(Rng& rng) const {
    const auto bucket = static_cast<std::size_t>(uniform_below(rng, prob_.size()));
    return uniform01(rng) < prob_[bucket] ? static_cast<int>(bucket) : alias_[bucket];
  }

 private:
  std::vector<double> prob_;
  std::vector<int> alias_;
};

}  // namespace textnet
