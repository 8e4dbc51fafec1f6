#pragma once

#include <cstdint>
#include <random>

#include "kleekit/vec.hpp"

namespace kleekit {

// Seeded generator with hand-rolled distributions so that streams are
// reproducible across standard libraries (std distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::uint64_t next_u64() { return gen_(); }

  // Marsaglia (1972) rejection method for uniform points on the unit sphere.
  Vec3 unit_vector() {
    for (;;) {
      const double x1 = uniform(-1.0, 1.0);
      const double x2 = uniform(-1.0, 1.0);
      const double rsq = x1 * x1 + x2 * x2;
      if (rsq >= 1.0 || rsq == 0.0) continue;
      const double root = std::sqrt(1.0 - rsq);
      return {2.0 * x1 * root, 2.0 * x2 * root, 1.0 - 2.0 * rsq};
    }
  }

  // Uniform direction in the unit circle of R^2.
  Vec2 unit_vector_2d() {
    for (;;) {
      const double x = uniform(-1.0, 1.0);
      const double y = uniform(-1.0, 1.0);
      const double n2 = x * x + y * y;
      if (n2 > 1.0 || n2 == 0.0) continue;
      const double n = std::sqrt(n2);
      return {x / n, y / n};
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace kleekit
