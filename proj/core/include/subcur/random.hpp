#pragma once

#include <cstdint>
#include <random>

namespace subcur {

/// Seeded generator for test corpora. The engine is std::mt19937_64 (fully
/// specified by the standard) and bounded draws use rejection sampling rather
/// than std::uniform_int_distribution, whose output is implementation-defined.
/// Identical seeds therefore give identical corpora on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [lo, hi].
  int uniform(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace subcur
