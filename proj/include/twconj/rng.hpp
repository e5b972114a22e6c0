#pragma once

#include <cstdint>
#include <random>

namespace twconj {

/// Seeded generator with a platform-stable bounded draw (mt19937_64 is
/// pinned by the standard; uniform_int_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish value in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace twconj
