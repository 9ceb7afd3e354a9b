#pragma once

// Polynomials in the spectral parameter, handled by sampling and
// interpolation. Coefficient lists are ascending: c[0] + c[1] u + ...

#include <cstddef>
#include <span>
#include <vector>

#include "gl11/dense.hpp"
#include "gl11/graded.hpp"

namespace gl11 {

using Coefficients = std::vector<cplx>;

cplx poly_eval(std::span<const cplx> coeffs, cplx u);
Coefficients poly_mul(std::span<const cplx> a, std::span<const cplx> b);
/// Coefficients of prod_k (u - roots[k]).
Coefficients poly_from_roots(std::span<const cplx> roots);

/// Sample set for interpolation of a scalar- or operator-valued polynomial
/// of degree at most `degree_bound`.
struct PolySamples {
  std::vector<cplx> nodes;
  std::vector<cplx> values;  // scalar case
  std::vector<GradedOperator> operator_values;  // operator case
  int degree_bound = 0;
};

/// `count` nodes center + radius * exp(i(2 pi k / count + phase)). The
/// Vandermonde system on these nodes is a scaled DFT and stays well
/// conditioned at the degrees used here.
std::vector<cplx> circle_nodes(std::size_t count, double radius, cplx center = 0.0,
                               double phase = 0.37);

/// Integer nodes 0, 1, 2, ... plus the smallest shift from a fixed ladder that
/// keeps every node at least 1e-3 away from `avoid`.
std::vector<cplx> integer_nodes(std::size_t count, std::span<const cplx> avoid,
                                cplx* shift_used = nullptr);

/// Interpolating coefficients (length = node count) of scalar samples.
/// Throws std::invalid_argument on duplicate nodes or too few nodes.
Coefficients interpolate(const PolySamples& samples);

/// Operator-valued interpolation: one coefficient operator per power.
std::vector<GradedOperator> interpolate_operator(const PolySamples& samples);

}  // namespace gl11
