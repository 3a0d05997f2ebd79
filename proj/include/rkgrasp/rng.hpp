#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace rkgrasp {

/// Seeded random stream owned by exactly one solver run.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Real and integer draws are derived from raw engine words here
/// rather than through <random> distributions, whose algorithms are
/// implementation-defined, so a seed reproduces the same values on every
/// platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Real in [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Real in [a,b). Returns a when b <= a.
  double uniform(double a, double b) {
    if (!(b > a)) return a;
    const double v = a + (b - a) * uniform();
    return v < b ? v : a;
  }

  /// Integer uniformly distributed in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // Rejection sampling on the top of the range keeps the draw unbiased.
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % bound;
  }

  /// Integer in the closed range [lo, hi].
  int between(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return uniform() < 0.5; }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = below(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace rkgrasp
