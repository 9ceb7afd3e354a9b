#include "gl11/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

// Functions carry target attributes so the translation unit builds without
// -mavx2; they are only reached after avx2_supported() returned true.
#define GL11_AVX2 __attribute__((target("avx2,fma")))

namespace gl11::kernels {
namespace {

// One __m256d holds two std::complex<double> (re, im, re, im).
GL11_AVX2 inline __m256d cmul_broadcast(__m256d ar, __m256d ai, __m256d b) {
  const __m256d bswap = _mm256_permute_pd(b, 0b0101);
  return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bswap));
}

GL11_AVX2 void gemm_avx2(const cplx* a, const cplx* b, cplx* c, std::size_t m,
                         std::size_t k, std::size_t n) {
  std::fill(c, c + m * n, cplx{});
  const std::size_t n2 = n & ~std::size_t{1};
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = reinterpret_cast<double*>(c + i * n);
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      if (aip == cplx{}) continue;
      const __m256d ar = _mm256_set1_pd(aip.real());
      const __m256d ai = _mm256_set1_pd(aip.imag());
      const double* brow = reinterpret_cast<const double*>(b + p * n);
      std::size_t j = 0;
      for (; j < n2; j += 2) {
        const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
        __m256d cv = _mm256_loadu_pd(crow + 2 * j);
        cv = _mm256_add_pd(cv, cmul_broadcast(ar, ai, bv));
        _mm256_storeu_pd(crow + 2 * j, cv);
      }
      for (; j < n; ++j) c[i * n + j] += aip * b[p * n + j];
    }
  }
}

GL11_AVX2 void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul_broadcast(ar, ai, xv)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

GL11_AVX2 double max_abs_diff_avx2(const cplx* x, const cplx* y,
                                   std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  __m256d best = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d d =
        _mm256_sub_pd(_mm256_loadu_pd(xd + 2 * i), _mm256_loadu_pd(yd + 2 * i));
    const __m256d sq = _mm256_mul_pd(d, d);
    // re^2 + im^2 in both lanes of each complex
    best = _mm256_max_pd(best, _mm256_hadd_pd(sq, sq));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double m = std::sqrt(std::max({lanes[0], lanes[1], lanes[2], lanes[3]}));
  for (; i < n; ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

GL11_AVX2 double squared_norm_avx2(const cplx* x, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(xd + 2 * i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) s += std::norm(x[i]);
  return s;
}

}  // namespace

bool avx2_supported() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

const KernelSet& avx2_kernels() {
  static const KernelSet set{"avx2", &gemm_avx2, &axpy_avx2,
                             &max_abs_diff_avx2, &squared_norm_avx2};
  return set;
}

}  // namespace gl11::kernels

#endif
