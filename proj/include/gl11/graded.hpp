#pragma once

// Z2-graded dense linear algebra.
//
// Conventions used throughout the library:
//  * Tensor-product bases are lexicographic with the leftmost factor slowest.
//  * Super tensor product of operators:
//      (A (x)_s B)^{ik}_{jl} = (-1)^{[p(i)+p(j)] p(k)} A^i_j B^k_l
//    so an odd operator on a factor collects a sign from the parities of the
//    factors to its right.
//  * Super permutation P^{ik}_{jl} = (-1)^{p(i)p(k)} d_{il} d_{jk}.
//  * Sign factors are computed as exact integers before multiplication.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "gl11/dense.hpp"

namespace gl11 {

/// Finite-dimensional Z2-graded vector space: one parity bit per basis vector.
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::vector<std::uint8_t> parity);
  GradedSpace(std::initializer_list<int> parity);

  /// The gl(1|1) fundamental space: |1> even, |2> odd.
  static GradedSpace fundamental() { return GradedSpace{0, 1}; }

  std::size_t dim() const { return parity_.size(); }
  int parity(std::size_t i) const { return parity_[i]; }
  std::span<const std::uint8_t> parities() const { return parity_; }

  friend bool operator==(const GradedSpace&, const GradedSpace&) = default;

 private:
  std::vector<std::uint8_t> parity_;
};

GradedSpace tensor(const GradedSpace& a, const GradedSpace& b);
GradedSpace tensor(std::span<const GradedSpace> factors);

/// Dense complex matrix bound to its (co)domain grading. Koszul signs are
/// produced by the operations below, never stored.
class GradedOperator {
 public:
  GradedOperator() = default;
  GradedOperator(GradedSpace domain, GradedSpace codomain, CMatrix entries);
  /// Square operator on one space.
  GradedOperator(const GradedSpace& space, CMatrix entries);

  static GradedOperator identity(const GradedSpace& space);
  static GradedOperator zero(const GradedSpace& space);
  /// Elementary matrix E^{ij} (0-based) on a square space.
  static GradedOperator unit(const GradedSpace& space, std::size_t i,
                             std::size_t j);

  const GradedSpace& domain() const { return domain_; }
  const GradedSpace& codomain() const { return codomain_; }
  const CMatrix& matrix() const { return m_; }
  CMatrix& matrix() { return m_; }
  bool square() const { return domain_ == codomain_; }

  const cplx& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  cplx& operator()(std::size_t r, std::size_t c) { return m_(r, c); }

  /// 0 or 1 for homogeneous operators, -1 for mixed parity. The zero
  /// operator reports 0.
  int parity(double tol = 0.0) const;

  /// Hermitian adjoint of the matrix (domain and codomain swapped).
  GradedOperator adjoint() const;

  GradedOperator& operator+=(const GradedOperator& o);
  GradedOperator& operator-=(const GradedOperator& o);
  GradedOperator& operator*=(cplx s);

 private:
  GradedSpace domain_;
  GradedSpace codomain_;
  CMatrix m_;
};

/// Composition a * b; requires b.codomain() == a.domain().
GradedOperator operator*(const GradedOperator& a, const GradedOperator& b);
GradedOperator operator+(GradedOperator a, const GradedOperator& b);
GradedOperator operator-(GradedOperator a, const GradedOperator& b);
GradedOperator operator*(cplx s, GradedOperator a);

double relative_residual(const GradedOperator& a, const GradedOperator& b,
                         double floor = 1e-300);

GradedOperator super_tensor(const GradedOperator& a, const GradedOperator& b);

/// Super permutation on V (x) V.
GradedOperator super_permutation(const GradedSpace& v);
/// Graded swap V (x) W -> W (x) V, |v,w> -> (-1)^{p(v)p(w)} |w,v>.
GradedOperator super_swap(const GradedSpace& v, const GradedSpace& w);

/// Full super trace, sum_i (-1)^{p(i)} A_ii.
cplx super_trace(const GradedOperator& a);

/// Partial super transposition on V (x) V in factor 1 or 2:
///   (A^{st_1})^{ik}_{jl} = A^{jk}_{il} (-1)^{p(i)[p(i)+p(j)]}
/// and the mirror rule for factor 2.
GradedOperator partial_super_transpose(const GradedOperator& a,
                                       const GradedSpace& v, int factor);

/// Signed permutation of a product basis: e_i -> sign[i] e_{target[i]}.
struct SignedPermutation {
  std::vector<std::size_t> target;
  std::vector<std::int8_t> sign;

  /// S A S^T
  CMatrix conjugate(const CMatrix& a) const;
  /// S^T A S
  CMatrix conjugate_inverse(const CMatrix& a) const;
  CMatrix as_matrix() const;
};

/// Koszul-signed map from the arrangement (factors[order[0]], ...,
/// factors[order[n-1]]) back to the natural arrangement (factors[0], ...).
/// Built as a composition of adjacent super swaps.
SignedPermutation factor_reorder(std::span<const GradedSpace> factors,
                                 std::span<const std::size_t> order);

/// Ordered list of tensor factors; the space all chain operators act on.
class Chain {
 public:
  Chain() = default;
  explicit Chain(std::vector<GradedSpace> factors);

  std::size_t size() const { return factors_.size(); }
  const GradedSpace& factor(std::size_t i) const { return factors_[i]; }
  std::span<const GradedSpace> factors() const { return factors_; }
  const GradedSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }

  GradedOperator identity() const { return GradedOperator::identity(space_); }

  /// A_{positions}: `a` acts on factors positions[0], positions[1], ... in
  /// that order and as the identity elsewhere. Adjacent increasing positions
  /// use super_tensor directly; anything else conjugates the front-placed
  /// operator with super permutations.
  GradedOperator embed(const GradedOperator& a,
                       std::span<const std::size_t> positions) const;
  GradedOperator embed(const GradedOperator& a,
                       std::initializer_list<std::size_t> positions) const {
    return embed(a, std::span<const std::size_t>(positions.begin(), positions.size()));
  }

  /// Partial super trace over the listed factors; the result acts on the
  /// remaining factors in their original order.
  GradedOperator partial_super_trace(const GradedOperator& a,
                                     std::span<const std::size_t> traced) const;
  GradedOperator partial_super_trace(
      const GradedOperator& a, std::initializer_list<std::size_t> traced) const {
    return partial_super_trace(
        a, std::span<const std::size_t>(traced.begin(), traced.size()));
  }

  /// The chain with the listed factors removed.
  Chain without(std::span<const std::size_t> removed) const;

 private:
  std::vector<GradedSpace> factors_;
  GradedSpace space_;
};

}  // namespace gl11
