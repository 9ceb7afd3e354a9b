#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace gl11 {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Arithmetic goes through the active
/// kernel set (see kernels.hpp).
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const cplx> d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<cplx> data() { return data_; }
  std::span<const cplx> data() const { return data_; }

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);
  /// this += alpha * o
  CMatrix& add_scaled(cplx alpha, const CMatrix& o);

  CMatrix adjoint() const;
  CMatrix transpose() const;
  cplx trace() const;

  double frobenius_norm() const;
  double max_abs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(cplx s, CMatrix a);

/// Largest entrywise |a - b|; shapes must agree.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// |a - b|_F / max(|b|_F, floor). The floor keeps near-zero references from
/// turning rounding noise into huge relative residuals.
double relative_residual(const CMatrix& a, const CMatrix& b,
                         double floor = 1e-300);

/// Partial-pivot LU factorization PA = LU, stored packed.
class LuDecomposition {
 public:
  explicit LuDecomposition(CMatrix a);

  cplx determinant() const;
  bool singular() const { return singular_; }
  /// Solves A x = b for each column of b. Throws on a singular factor.
  CMatrix solve(const CMatrix& b) const;

 private:
  CMatrix lu_;
  std::vector<std::size_t> pivot_;
  int sign_ = 1;
  bool singular_ = false;
};

cplx lu_determinant(const CMatrix& m);
CMatrix solve(const CMatrix& a, const CMatrix& b);

}  // namespace gl11
