#include "gl11/dense.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gl11/kernels.hpp"

namespace gl11 {
namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

}  // namespace

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const cplx> d) {
  CMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) { return add_scaled(1.0, o); }
CMatrix& CMatrix::operator-=(const CMatrix& o) { return add_scaled(-1.0, o); }

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  return *this;
}

CMatrix& CMatrix::add_scaled(cplx alpha, const CMatrix& o) {
  require_same_shape(*this, o, "add_scaled");
  kernels::active().axpy(alpha, o.data_.data(), data_.data(), data_.size());
  return *this;
}

CMatrix CMatrix::adjoint() const {
  CMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = std::conj((*this)(r, c));
  return t;
}

CMatrix CMatrix::transpose() const {
  CMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

cplx CMatrix::trace() const {
  if (!square()) throw std::invalid_argument("trace: non-square matrix");
  cplx s{};
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

double CMatrix::frobenius_norm() const {
  return std::sqrt(kernels::active().squared_norm(data_.data(), data_.size()));
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : data_) m = std::max(m, std::abs(x));
  return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product: inner dimension mismatch");
  CMatrix c(a.rows(), b.cols());
  kernels::active().gemm(a.data().data(), b.data().data(), c.data().data(),
                         a.rows(), a.cols(), b.cols());
  return c;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  return kernels::active().max_abs_diff(a.data().data(), b.data().data(),
                                        a.data().size());
}

double relative_residual(const CMatrix& a, const CMatrix& b, double floor) {
  return (a - b).frobenius_norm() / std::max(b.frobenius_norm(), floor);
}

LuDecomposition::LuDecomposition(CMatrix a) : lu_(std::move(a)) {
  if (!lu_.square()) throw std::invalid_argument("LU: non-square matrix");
  const std::size_t n = lu_.rows();
  pivot_.resize(n);
  for (std::size_t i = 0; i < n; ++i) pivot_[i] = i;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    double best_abs = std::abs(lu_(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(lu_(r, col));
      if (v > best_abs) {
        best = r;
        best_abs = v;
      }
    }
    if (best_abs == 0.0) {
      singular_ = true;
      continue;
    }
    if (best != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu_(col, c), lu_(best, c));
      std::swap(pivot_[col], pivot_[best]);
      sign_ = -sign_;
    }
    const cplx inv = 1.0 / lu_(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const cplx f = lu_(r, col) * inv;
      lu_(r, col) = f;
      if (f == cplx{}) continue;
      for (std::size_t c = col + 1; c < n; ++c) lu_(r, c) -= f * lu_(col, c);
    }
  }
}

cplx LuDecomposition::determinant() const {
  if (singular_) return 0.0;
  cplx d = static_cast<double>(sign_);
  for (std::size_t i = 0; i < lu_.rows(); ++i) d *= lu_(i, i);
  return d;
}

CMatrix LuDecomposition::solve(const CMatrix& b) const {
  if (singular_) throw std::domain_error("LU solve: singular matrix");
  const std::size_t n = lu_.rows();
  if (b.rows() != n) throw std::invalid_argument("LU solve: shape mismatch");
  CMatrix x(n, b.cols());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) x(r, c) = b(pivot_[r], c);
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < r; ++k) x(r, c) -= lu_(r, k) * x(k, c);
    for (std::size_t r = n; r-- > 0;) {
      for (std::size_t k = r + 1; k < n; ++k) x(r, c) -= lu_(r, k) * x(k, c);
      x(r, c) /= lu_(r, r);
    }
  }
  return x;
}

cplx lu_determinant(const CMatrix& m) { return LuDecomposition(m).determinant(); }

CMatrix solve(const CMatrix& a, const CMatrix& b) {
  return LuDecomposition(a).solve(b);
}

}  // namespace gl11
