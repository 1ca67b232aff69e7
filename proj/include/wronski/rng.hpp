#pragma once
// Deterministic 64-bit generator (SplitMix64) with explicit bit-level output
// conversion, so seeded runs reproduce bit-for-bit across platforms and
// thread counts.

#include <cmath>
#include <cstdint>
#include <vector>

#include "wronski/numeric.hpp"

namespace wronski {

class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 significant bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Uniform over the disc of the given radius around the center.
  Complex in_disc(Complex center, double radius) {
    const double r = radius * std::sqrt(uniform());
    const double phi = 6.283185307179586477 * uniform();
    return center + std::polar(r, phi);
  }

  // Uniform integer in [0, bound); bound = 0 yields 0.
  uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }

  // Decorrelated stream for a given (seed, index) pair; used so concurrent
  // solver starts draw identical numbers regardless of scheduling.
  static SplitMix64 stream(uint64_t seed, uint64_t index) {
    SplitMix64 rng(seed ^ (0xD1B54A32D192ED03ull * (index + 1)));
    rng.next();
    rng.next();
    return rng;
  }

 private:
  uint64_t state_;
};

// n points uniform in the unit disc, resampled until the minimum pairwise
// distance exceeds one percent of the disc diameter.
inline std::vector<Complex> sample_generic_config(int n, SplitMix64& rng) {
  const double min_dist = 0.02;
  for (;;) {
    std::vector<Complex> z;
    z.reserve(n);
    for (int i = 0; i < n; ++i) z.push_back(rng.in_disc({0.0, 0.0}, 1.0));
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if (std::abs(z[i] - z[j]) < min_dist) ok = false;
    if (ok) return z;
  }
}

}  // namespace wronski
