#include "gl11/graded.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gl11 {
namespace {

std::vector<std::uint8_t> checked_parity(std::vector<std::uint8_t> p) {
  if (p.empty()) throw std::invalid_argument("GradedSpace: dimension must be positive");
  for (auto x : p)
    if (x > 1) throw std::invalid_argument("GradedSpace: parity must be 0 or 1");
  return p;
}

// Mixed-radix digits of a product-basis index, leftmost factor slowest.
void split_index(std::size_t index, std::span<const std::size_t> dims,
                 std::span<std::size_t> digits) {
  for (std::size_t q = dims.size(); q-- > 0;) {
    digits[q] = index % dims[q];
    index /= dims[q];
  }
}

std::size_t join_index(std::span<const std::size_t> digits,
                       std::span<const std::size_t> dims) {
  std::size_t index = 0;
  for (std::size_t q = 0; q < dims.size(); ++q) index = index * dims[q] + digits[q];
  return index;
}

}  // namespace

GradedSpace::GradedSpace(std::vector<std::uint8_t> parity)
    : parity_(checked_parity(std::move(parity))) {}

GradedSpace::GradedSpace(std::initializer_list<int> parity) {
  std::vector<std::uint8_t> p;
  for (int x : parity) {
    if (x != 0 && x != 1) throw std::invalid_argument("GradedSpace: parity must be 0 or 1");
    p.push_back(static_cast<std::uint8_t>(x));
  }
  parity_ = checked_parity(std::move(p));
}

GradedSpace tensor(const GradedSpace& a, const GradedSpace& b) {
  std::vector<std::uint8_t> p;
  p.reserve(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < b.dim(); ++k)
      p.push_back(static_cast<std::uint8_t>((a.parity(i) + b.parity(k)) & 1));
  return GradedSpace(std::move(p));
}

GradedSpace tensor(std::span<const GradedSpace> factors) {
  if (factors.empty()) throw std::invalid_argument("tensor: no factors");
  GradedSpace out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) out = tensor(out, factors[i]);
  return out;
}

GradedOperator::GradedOperator(GradedSpace domain, GradedSpace codomain,
                               CMatrix entries)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), m_(std::move(entries)) {
  if (m_.rows() != codomain_.dim() || m_.cols() != domain_.dim())
    throw std::invalid_argument("GradedOperator: entry shape does not match spaces");
}

GradedOperator::GradedOperator(const GradedSpace& space, CMatrix entries)
    : GradedOperator(space, space, std::move(entries)) {}

GradedOperator GradedOperator::identity(const GradedSpace& space) {
  return {space, CMatrix::identity(space.dim())};
}

GradedOperator GradedOperator::zero(const GradedSpace& space) {
  return {space, CMatrix(space.dim(), space.dim())};
}

GradedOperator GradedOperator::unit(const GradedSpace& space, std::size_t i,
                                    std::size_t j) {
  CMatrix m(space.dim(), space.dim());
  m(i, j) = 1.0;
  return {space, std::move(m)};
}

int GradedOperator::parity(double tol) const {
  int found = -2;
  for (std::size_t r = 0; r < m_.rows(); ++r) {
    for (std::size_t c = 0; c < m_.cols(); ++c) {
      if (std::abs(m_(r, c)) <= tol) continue;
      const int p = (codomain_.parity(r) + domain_.parity(c)) & 1;
      if (found == -2) found = p;
      else if (found != p) return -1;
    }
  }
  return found == -2 ? 0 : found;
}

GradedOperator GradedOperator::adjoint() const {
  return {codomain_, domain_, m_.adjoint()};
}

GradedOperator& GradedOperator::operator+=(const GradedOperator& o) {
  if (o.domain_ != domain_ || o.codomain_ != codomain_)
    throw std::invalid_argument("GradedOperator +: space mismatch");
  m_ += o.m_;
  return *this;
}

GradedOperator& GradedOperator::operator-=(const GradedOperator& o) {
  if (o.domain_ != domain_ || o.codomain_ != codomain_)
    throw std::invalid_argument("GradedOperator -: space mismatch");
  m_ -= o.m_;
  return *this;
}

GradedOperator& GradedOperator::operator*=(cplx s) {
  m_ *= s;
  return *this;
}

GradedOperator operator*(const GradedOperator& a, const GradedOperator& b) {
  if (!(b.codomain() == a.domain()))
    throw std::invalid_argument("GradedOperator composition: space mismatch");
  return {b.domain(), a.codomain(), a.matrix() * b.matrix()};
}

GradedOperator operator+(GradedOperator a, const GradedOperator& b) { return a += b; }
GradedOperator operator-(GradedOperator a, const GradedOperator& b) { return a -= b; }
GradedOperator operator*(cplx s, GradedOperator a) { return a *= s; }

double relative_residual(const GradedOperator& a, const GradedOperator& b,
                         double floor) {
  return relative_residual(a.matrix(), b.matrix(), floor);
}

GradedOperator super_tensor(const GradedOperator& a, const GradedOperator& b) {
  const auto& ad = a.domain();
  const auto& ac = a.codomain();
  const auto& bd = b.domain();
  const auto& bc = b.codomain();
  CMatrix m(ac.dim() * bc.dim(), ad.dim() * bd.dim());
  for (std::size_t i = 0; i < ac.dim(); ++i) {
    for (std::size_t j = 0; j < ad.dim(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      const int pa = ac.parity(i) + ad.parity(j);
      for (std::size_t k = 0; k < bc.dim(); ++k) {
        const int sign = ((pa * bc.parity(k)) & 1) ? -1 : 1;
        for (std::size_t l = 0; l < bd.dim(); ++l) {
          m(i * bc.dim() + k, j * bd.dim() + l) = static_cast<double>(sign) * aij * b(k, l);
        }
      }
    }
  }
  return {tensor(ad, bd), tensor(ac, bc), std::move(m)};
}

GradedOperator super_swap(const GradedSpace& v, const GradedSpace& w) {
  CMatrix m(v.dim() * w.dim(), v.dim() * w.dim());
  for (std::size_t a = 0; a < v.dim(); ++a)
    for (std::size_t b = 0; b < w.dim(); ++b)
      m(b * v.dim() + a, a * w.dim() + b) = (v.parity(a) & w.parity(b)) ? -1.0 : 1.0;
  return {tensor(v, w), tensor(w, v), std::move(m)};
}

GradedOperator super_permutation(const GradedSpace& v) { return super_swap(v, v); }

cplx super_trace(const GradedOperator& a) {
  if (!a.square()) throw std::invalid_argument("super_trace: operator is not square");
  cplx s{};
  for (std::size_t i = 0; i < a.domain().dim(); ++i)
    s += a.domain().parity(i) ? -a(i, i) : a(i, i);
  return s;
}

GradedOperator partial_super_transpose(const GradedOperator& a,
                                       const GradedSpace& v, int factor) {
  if (factor != 1 && factor != 2)
    throw std::invalid_argument("partial_super_transpose: factor must be 1 or 2");
  const GradedSpace vv = tensor(v, v);
  if (!(a.domain() == vv) || !(a.codomain() == vv))
    throw std::invalid_argument("partial_super_transpose: operator must act on V (x) V");
  const std::size_t d = v.dim();
  CMatrix m(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t l = 0; l < d; ++l) {
          if (factor == 1) {
            const int s = (v.parity(i) * (v.parity(i) + v.parity(j))) & 1;
            m(i * d + k, j * d + l) = (s ? -1.0 : 1.0) * a(j * d + k, i * d + l);
          } else {
            const int s = (v.parity(k) * (v.parity(k) + v.parity(l))) & 1;
            m(i * d + k, j * d + l) = (s ? -1.0 : 1.0) * a(i * d + l, j * d + k);
          }
        }
  return {vv, std::move(m)};
}

CMatrix SignedPermutation::conjugate(const CMatrix& a) const {
  CMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out(target[r], target[c]) = static_cast<double>(sign[r] * sign[c]) * a(r, c);
  return out;
}

CMatrix SignedPermutation::conjugate_inverse(const CMatrix& a) const {
  CMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out(r, c) = static_cast<double>(sign[r] * sign[c]) * a(target[r], target[c]);
  return out;
}

CMatrix SignedPermutation::as_matrix() const {
  CMatrix m(target.size(), target.size());
  for (std::size_t i = 0; i < target.size(); ++i) m(target[i], i) = sign[i];
  return m;
}

SignedPermutation factor_reorder(std::span<const GradedSpace> factors,
                                 std::span<const std::size_t> order) {
  const std::size_t n = factors.size();
  if (order.size() != n) throw std::invalid_argument("factor_reorder: order size mismatch");
  std::vector<bool> seen(n, false);
  for (auto o : order) {
    if (o >= n || seen[o]) throw std::invalid_argument("factor_reorder: order is not a permutation");
    seen[o] = true;
  }
  std::vector<std::size_t> natural_dims(n), arranged_dims(n);
  for (std::size_t q = 0; q < n; ++q) {
    natural_dims[q] = factors[q].dim();
    arranged_dims[q] = factors[order[q]].dim();
  }
  const std::size_t total = std::accumulate(natural_dims.begin(), natural_dims.end(),
                                            std::size_t{1}, std::multiplies<>());
  SignedPermutation perm{std::vector<std::size_t>(total), std::vector<std::int8_t>(total)};
  std::vector<std::size_t> digits(n), labels(n), natural(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    split_index(idx, arranged_dims, digits);
    for (std::size_t q = 0; q < n; ++q) labels[q] = order[q];
    // Bubble the arrangement into natural order one adjacent super swap at a
    // time; each swap of basis vectors x, y contributes (-1)^{p(x)p(y)}.
    int parity = 0;
    for (std::size_t pass = 0; pass < n; ++pass) {
      for (std::size_t q = 0; q + 1 < n; ++q) {
        if (labels[q] > labels[q + 1]) {
          parity += factors[labels[q]].parity(digits[q]) *
                    factors[labels[q + 1]].parity(digits[q + 1]);
          std::swap(labels[q], labels[q + 1]);
          std::swap(digits[q], digits[q + 1]);
        }
      }
    }
    perm.target[idx] = join_index(digits, natural_dims);
    perm.sign[idx] = (parity & 1) ? -1 : 1;
  }
  return perm;
}

Chain::Chain(std::vector<GradedSpace> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("Chain: no factors");
  space_ = tensor(factors_);
}

GradedOperator Chain::embed(const GradedOperator& a,
                            std::span<const std::size_t> positions) const {
  const std::size_t n = factors_.size();
  if (positions.empty()) throw std::invalid_argument("embed: no positions");
  std::vector<bool> used(n, false);
  std::vector<GradedSpace> selected;
  for (auto p : positions) {
    if (p >= n) throw std::invalid_argument("embed: position " + std::to_string(p) + " out of range");
    if (used[p]) throw std::invalid_argument("embed: repeated position");
    used[p] = true;
    selected.push_back(factors_[p]);
  }
  const GradedSpace target = tensor(selected);
  if (!(a.domain() == target) || !(a.codomain() == target))
    throw std::invalid_argument("embed: operator space does not match the selected factors");

  bool adjacent = true;
  for (std::size_t q = 1; q < positions.size(); ++q)
    adjacent = adjacent && positions[q] == positions[q - 1] + 1;

  if (adjacent) {
    const std::size_t first = positions.front();
    const std::size_t last = positions.back();
    GradedOperator out = a;
    if (first > 0) {
      out = super_tensor(
          GradedOperator::identity(tensor(std::span(factors_.data(), first))), out);
    }
    if (last + 1 < n) {
      out = super_tensor(out, GradedOperator::identity(tensor(
                                  std::span(factors_.data() + last + 1, n - last - 1))));
    }
    return out;
  }

  std::vector<std::size_t> order(positions.begin(), positions.end());
  std::vector<GradedSpace> rest;
  for (std::size_t q = 0; q < n; ++q) {
    if (!used[q]) {
      order.push_back(q);
      rest.push_back(factors_[q]);
    }
  }
  GradedOperator front = rest.empty()
                             ? a
                             : super_tensor(a, GradedOperator::identity(tensor(rest)));
  const SignedPermutation s = factor_reorder(factors_, order);
  return {space_, s.conjugate(front.matrix())};
}

GradedOperator Chain::partial_super_trace(const GradedOperator& a,
                                          std::span<const std::size_t> traced) const {
  if (!(a.domain() == space_) || !(a.codomain() == space_))
    throw std::invalid_argument("partial_super_trace: operator does not act on the chain");
  const std::size_t n = factors_.size();
  std::vector<bool> used(n, false);
  std::vector<std::size_t> order(traced.begin(), traced.end());
  std::vector<GradedSpace> front;
  for (auto t : traced) {
    if (t >= n || used[t]) throw std::invalid_argument("partial_super_trace: bad factor list");
    used[t] = true;
    front.push_back(factors_[t]);
  }
  if (traced.empty()) return a;
  if (traced.size() == n) {
    CMatrix s(1, 1);
    s(0, 0) = super_trace(a);
    return {GradedSpace{0}, std::move(s)};
  }
  std::vector<GradedSpace> rest;
  for (std::size_t q = 0; q < n; ++q) {
    if (!used[q]) {
      order.push_back(q);
      rest.push_back(factors_[q]);
    }
  }
  const SignedPermutation s = factor_reorder(factors_, order);
  const CMatrix arranged = s.conjugate_inverse(a.matrix());
  const GradedSpace front_space = tensor(front);
  const GradedSpace rest_space = tensor(rest);
  const std::size_t dr = rest_space.dim();
  CMatrix out(dr, dr);
  for (std::size_t alpha = 0; alpha < front_space.dim(); ++alpha) {
    const double w = front_space.parity(alpha) ? -1.0 : 1.0;
    for (std::size_t k = 0; k < dr; ++k)
      for (std::size_t l = 0; l < dr; ++l)
        out(k, l) += w * arranged(alpha * dr + k, alpha * dr + l);
  }
  return {rest_space, std::move(out)};
}

Chain Chain::without(std::span<const std::size_t> removed) const {
  std::vector<GradedSpace> keep;
  for (std::size_t q = 0; q < factors_.size(); ++q)
    if (std::find(removed.begin(), removed.end(), q) == removed.end())
      keep.push_back(factors_[q]);
  return Chain(std::move(keep));
}

}  // namespace gl11
