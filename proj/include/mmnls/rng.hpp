#pragma once

#include <cstdint>
#include <random>

namespace mmnls {

/// Deterministic uniform draws on top of mt19937_64. std::uniform_real_distribution
/// is implementation-defined, so the mapping from raw bits to [0,1) is done by hand
/// to keep sampled point sets and initializations reproducible across toolchains.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t raw() { return gen_(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // rejection sampling to avoid modulo bias
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace mmnls
