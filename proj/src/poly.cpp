#include "gl11/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gl11 {
namespace {

void validate_nodes(const PolySamples& s, std::size_t value_count) {
  if (s.nodes.size() != value_count)
    throw std::invalid_argument("interpolate: node and value counts differ");
  if (s.degree_bound < 0 || s.nodes.size() < static_cast<std::size_t>(s.degree_bound) + 1)
    throw std::invalid_argument("interpolate: need at least degree_bound + 1 nodes");
  for (std::size_t i = 0; i < s.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < s.nodes.size(); ++j)
      if (std::abs(s.nodes[i] - s.nodes[j]) < 1e-14 * (1.0 + std::abs(s.nodes[i])))
        throw std::invalid_argument("interpolate: duplicate nodes");
}

CMatrix vandermonde(std::span<const cplx> nodes) {
  const std::size_t n = nodes.size();
  CMatrix v(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    cplx x = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
      v(r, c) = x;
      x *= nodes[r];
    }
  }
  return v;
}

}  // namespace

cplx poly_eval(std::span<const cplx> coeffs, cplx u) {
  cplx acc{};
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * u + coeffs[k];
  return acc;
}

Coefficients poly_mul(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.empty() || b.empty()) return {};
  Coefficients out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Coefficients poly_from_roots(std::span<const cplx> roots) {
  Coefficients out{1.0};
  for (const cplx r : roots) {
    const cplx factor[2] = {-r, 1.0};
    out = poly_mul(out, factor);
  }
  return out;
}

std::vector<cplx> circle_nodes(std::size_t count, double radius, cplx center,
                               double phase) {
  std::vector<cplx> nodes(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                             static_cast<double>(count) + phase;
    nodes[k] = center + std::polar(radius, angle);
  }
  return nodes;
}

std::vector<cplx> integer_nodes(std::size_t count, std::span<const cplx> avoid,
                                cplx* shift_used) {
  static constexpr double kLadder[] = {0.0, 0.1234, 0.2718, 0.3183, 0.4142, 0.5772};
  for (double re : kLadder) {
    for (double im : kLadder) {
      const cplx shift(re, im);
      bool ok = true;
      for (std::size_t k = 0; k < count && ok; ++k)
        for (const cplx a : avoid)
          if (std::abs(static_cast<double>(k) + shift - a) < 1e-3) ok = false;
      if (!ok) continue;
      if (shift_used != nullptr) *shift_used = shift;
      std::vector<cplx> nodes(count);
      for (std::size_t k = 0; k < count; ++k) nodes[k] = static_cast<double>(k) + shift;
      return nodes;
    }
  }
  throw std::domain_error("integer_nodes: no admissible shift found");
}

Coefficients interpolate(const PolySamples& s) {
  validate_nodes(s, s.values.size());
  const std::size_t n = s.nodes.size();
  CMatrix rhs(n, 1);
  for (std::size_t i = 0; i < n; ++i) rhs(i, 0) = s.values[i];
  const CMatrix c = solve(vandermonde(s.nodes), rhs);
  Coefficients out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = c(i, 0);
  return out;
}

std::vector<GradedOperator> interpolate_operator(const PolySamples& s) {
  validate_nodes(s, s.operator_values.size());
  const std::size_t n = s.nodes.size();
  const GradedOperator& first = s.operator_values.front();
  const std::size_t rows = first.matrix().rows();
  const std::size_t cols = first.matrix().cols();
  CMatrix rhs(n, rows * cols);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& op = s.operator_values[i];
    if (!(op.domain() == first.domain()) || !(op.codomain() == first.codomain()))
      throw std::invalid_argument("interpolate_operator: samples act on different spaces");
    std::copy(op.matrix().data().begin(), op.matrix().data().end(),
              rhs.data().begin() + static_cast<std::ptrdiff_t>(i * rows * cols));
  }
  const CMatrix c = solve(vandermonde(s.nodes), rhs);
  std::vector<GradedOperator> out;
  out.reserve(n);
  for (std::size_t p = 0; p < n; ++p) {
    CMatrix m(rows, cols);
    std::copy(c.data().begin() + static_cast<std::ptrdiff_t>(p * rows * cols),
              c.data().begin() + static_cast<std::ptrdiff_t>((p + 1) * rows * cols),
              m.data().begin());
    out.emplace_back(first.domain(), first.codomain(), std::move(m));
  }
  return out;
}

}  // namespace gl11
