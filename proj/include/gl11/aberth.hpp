#pragma once

// Aberth-Ehrlich simultaneous root finding for dense complex polynomials.

#include <string>
#include <vector>

#include "gl11/poly.hpp"

namespace gl11 {

struct AberthOptions {
  int max_sweeps = 500;
  double step_tolerance = 1e-12;  // max |step| / (1 + |z|) at convergence
  double trim_tolerance = 1e-13;  // leading coefficients below this * max |c| are dropped
};

struct AberthResult {
  std::vector<cplx> roots;
  int sweeps = 0;
  double last_step = 0.0;
};

/// Drops leading coefficients that are zero up to `rel` times the largest.
Coefficients trim_leading(Coefficients c, double rel);

/// All roots of sum_k c[k] u^k. Starts from a circle of radius
/// 1 + max |c[k] / c[n]|. Throws ConvergenceError with a residual dump when
/// the sweep cap is hit; PreconditionError for the zero polynomial.
AberthResult aberth_roots(const Coefficients& coeffs, const AberthOptions& opt = {});

/// Groups roots closer than `tol` and returns the cluster means.
std::vector<cplx> dedup_roots(const std::vector<cplx>& roots, double tol = 1e-8);

}  // namespace gl11
