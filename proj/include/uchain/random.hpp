#pragma once

#include <cstdint>
#include <random>

#include "uchain/polynomial.hpp"

namespace uchain {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed for trial `index` of a campaign; independent of evaluation order.
inline std::uint64_t derive_seed(std::uint64_t campaign_seed, std::uint64_t index) {
  return splitmix64(campaign_seed ^ splitmix64(index + 0x51ED270B27A3C8F1ULL));
}

/// mt19937_64 with portable bounded draws (the std distributions are
/// implementation-defined, which would break cross-platform determinism).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  int uniform(int lo, int hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }
  bool chance(int numerator, int denominator) { return uniform(0, denominator - 1) < numerator; }

  /// Random polynomial of degree <= max_degree (possibly zero).
  Polynomial polynomial(int max_degree) {
    Polynomial p;
    for (int e = 0; e <= max_degree; ++e) {
      if (engine_() & 1U) p.flip(e);
    }
    return p;
  }
  Polynomial nonzero_polynomial(int max_degree) {
    Polynomial p;
    while (p.is_zero()) p = polynomial(max_degree);
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace uchain
