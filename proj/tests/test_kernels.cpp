#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "gl11/kernels.hpp"

using gl11::kernels::cplx;
using gl11::kernels::KernelSet;

namespace {

std::vector<cplx> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<cplx> v(n);
  for (auto& z : v) z = {d(rng), d(rng)};
  return v;
}

std::vector<const KernelSet*> vector_sets() {
  std::vector<const KernelSet*> out;
#if defined(__x86_64__) || defined(_M_X64)
  if (gl11::kernels::avx2_supported()) out.push_back(&gl11::kernels::avx2_kernels());
#endif
#if defined(__aarch64__)
  out.push_back(&gl11::kernels::neon_kernels());
#endif
  return out;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST(Kernels, ActiveSetIsKnown) {
  const auto name = gl11::kernels::active().name;
  EXPECT_TRUE(name == "scalar" || name == "avx2" || name == "neon") << name;
}

TEST(Kernels, ScalarGemmMatchesHandProduct) {
  const std::vector<cplx> a = {cplx(1, 1), 2.0, 0.0, cplx(0, -1)};
  const std::vector<cplx> b = {3.0, cplx(0, 1), 1.0, 1.0};
  std::vector<cplx> c(4);
  gl11::kernels::scalar_kernels().gemm(a.data(), b.data(), c.data(), 2, 2, 2);
  EXPECT_EQ(c[0], cplx(5, 3));
  EXPECT_EQ(c[1], cplx(1, 1));
  EXPECT_EQ(c[2], cplx(0, -1));
  EXPECT_EQ(c[3], cplx(0, -1));
}

// Odd sizes exercise the scalar tails of the vector loops.
TEST(Kernels, VectorVariantsMatchScalarReference) {
  const auto& ref = gl11::kernels::scalar_kernels();
  const auto sets = vector_sets();
  if (sets.empty()) GTEST_SKIP() << "no vector kernel set on this CPU";
  std::mt19937_64 rng(2024);
  for (const KernelSet* ks : sets) {
    for (std::size_t m : {1u, 3u, 8u, 17u}) {
      for (std::size_t k : {1u, 2u, 7u, 16u}) {
        for (std::size_t n : {1u, 5u, 8u, 33u}) {
          const auto a = random_vector(rng, m * k);
          const auto b = random_vector(rng, k * n);
          std::vector<cplx> c_ref(m * n), c_vec(m * n);
          ref.gemm(a.data(), b.data(), c_ref.data(), m, k, n);
          ks->gemm(a.data(), b.data(), c_vec.data(), m, k, n);
          EXPECT_LT(max_diff(c_ref, c_vec), 1e-13 * static_cast<double>(k))
              << ks->name << " gemm " << m << "x" << k << "x" << n;
        }
      }
    }
    for (std::size_t n : {0u, 1u, 2u, 3u, 31u, 64u}) {
      const auto x = random_vector(rng, n);
      const auto y0 = random_vector(rng, n);
      auto y_ref = y0;
      auto y_vec = y0;
      const cplx alpha(0.3, -1.7);
      ref.axpy(alpha, x.data(), y_ref.data(), n);
      ks->axpy(alpha, x.data(), y_vec.data(), n);
      EXPECT_LT(max_diff(y_ref, y_vec), 1e-15) << ks->name << " axpy " << n;
      EXPECT_NEAR(ref.max_abs_diff(x.data(), y0.data(), n),
                  ks->max_abs_diff(x.data(), y0.data(), n), 1e-15);
      EXPECT_NEAR(ref.squared_norm(x.data(), n), ks->squared_norm(x.data(), n),
                  1e-13 * (1.0 + static_cast<double>(n)));
    }
  }
}
