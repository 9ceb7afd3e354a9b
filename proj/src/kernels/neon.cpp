#include "gl11/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <algorithm>
#include <cmath>

namespace gl11::kernels {
namespace {

// One float64x2_t holds one std::complex<double>.
inline float64x2_t cmul(float64x2_t a, float64x2_t b) {
  const float64x2_t are = vdupq_laneq_f64(a, 0);
  const float64x2_t aim = vdupq_laneq_f64(a, 1);
  // (br, bi) -> (-bi, br)
  const float64x2_t brot =
      vcombine_f64(vneg_f64(vget_high_f64(b)), vget_low_f64(b));
  return vfmaq_f64(vmulq_f64(are, b), aim, brot);
}

void gemm_neon(const cplx* a, const cplx* b, cplx* c, std::size_t m,
               std::size_t k, std::size_t n) {
  std::fill(c, c + m * n, cplx{});
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = reinterpret_cast<double*>(c + i * n);
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      if (aip == cplx{}) continue;
      const float64x2_t av =
          vld1q_f64(reinterpret_cast<const double*>(a + i * k + p));
      const double* brow = reinterpret_cast<const double*>(b + p * n);
      for (std::size_t j = 0; j < n; ++j) {
        const float64x2_t cv = vld1q_f64(crow + 2 * j);
        vst1q_f64(crow + 2 * j, vaddq_f64(cv, cmul(av, vld1q_f64(brow + 2 * j))));
      }
    }
  }
}

void axpy_neon(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const float64x2_t av = vld1q_f64(reinterpret_cast<const double*>(&alpha));
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t yv = vld1q_f64(yd + 2 * i);
    vst1q_f64(yd + 2 * i, vaddq_f64(yv, cmul(av, vld1q_f64(xd + 2 * i))));
  }
}

double max_abs_diff_neon(const cplx* x, const cplx* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t d = vsubq_f64(vld1q_f64(xd + 2 * i), vld1q_f64(yd + 2 * i));
    best = std::max(best, vaddvq_f64(vmulq_f64(d, d)));
  }
  return std::sqrt(best);
}

double squared_norm_neon(const cplx* x, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t v = vld1q_f64(xd + 2 * i);
    acc = vfmaq_f64(acc, v, v);
  }
  return vaddvq_f64(acc);
}

}  // namespace

const KernelSet& neon_kernels() {
  static const KernelSet set{"neon", &gemm_neon, &axpy_neon,
                             &max_abs_diff_neon, &squared_norm_neon};
  return set;
}

}  // namespace gl11::kernels

#endif
