#pragma once

// Complex double inner-loop kernels. Every kernel has a portable scalar
// reference; vectorized variants (AVX2+FMA on x86-64, NEON on AArch64) are
// picked once at startup and must agree with the reference to rounding.

#include <complex>
#include <cstddef>
#include <string_view>

namespace gl11::kernels {

using cplx = std::complex<double>;

/// C[m x n] = A[m x k] * B[k x n], all row-major and contiguous.
using GemmFn = void (*)(const cplx* a, const cplx* b, cplx* c, std::size_t m,
                        std::size_t k, std::size_t n);
/// y[i] += alpha * x[i]
using AxpyFn = void (*)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
/// max_i |x[i] - y[i]|
using MaxAbsDiffFn = double (*)(const cplx* x, const cplx* y, std::size_t n);
/// sum_i |x[i]|^2
using SquaredNormFn = double (*)(const cplx* x, std::size_t n);

struct KernelSet {
  std::string_view name;
  GemmFn gemm;
  AxpyFn axpy;
  MaxAbsDiffFn max_abs_diff;
  SquaredNormFn squared_norm;
};

const KernelSet& scalar_kernels();

#if defined(__x86_64__) || defined(_M_X64)
const KernelSet& avx2_kernels();
bool avx2_supported();
#endif

#if defined(__aarch64__)
const KernelSet& neon_kernels();
#endif

/// The kernel set used by the library. Resolved on first call from CPU
/// features; the environment variable GL11_KERNELS=scalar forces the
/// reference path.
const KernelSet& active();

}  // namespace gl11::kernels
