#pragma once

// Platform-independent seeded draws. std::*_distribution output is not
// specified bit-for-bit across standard libraries, so reports that must be
// byte-identical draw through this wrapper instead.

#include <cstdint>
#include <random>

#include "gl11/dense.hpp"

namespace gl11 {

class SeededDraw {
 public:
  explicit SeededDraw(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  /// Real and imaginary parts uniform in [lo, hi).
  cplx complex(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gl11
