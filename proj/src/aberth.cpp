#include "gl11/aberth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gl11/errors.hpp"

namespace gl11 {

Coefficients trim_leading(Coefficients c, double rel) {
  double m = 0.0;
  for (const cplx z : c) m = std::max(m, std::abs(z));
  while (!c.empty() && std::abs(c.back()) <= rel * m) c.pop_back();
  return c;
}

AberthResult aberth_roots(const Coefficients& coeffs, const AberthOptions& opt) {
  const Coefficients c = trim_leading(coeffs, opt.trim_tolerance);
  if (c.empty()) throw PreconditionError("aberth: zero polynomial has no isolated roots");
  AberthResult res;
  const std::size_t n = c.size() - 1;
  if (n == 0) return res;

  Coefficients d(n);
  for (std::size_t k = 1; k <= n; ++k) d[k - 1] = static_cast<double>(k) * c[k];

  double ratio = 0.0;
  for (std::size_t k = 0; k < n; ++k) ratio = std::max(ratio, std::abs(c[k] / c[n]));
  const double radius = 1.0 + ratio;
  // Off-axis phase so that no start sits on a symmetry line of the problem.
  std::vector<cplx> z(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4);

  for (int sweep = 1; sweep <= opt.max_sweeps; ++sweep) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx pv = poly_eval(c, z[i]);
      if (pv == cplx{}) continue;
      const cplx ratio_i = pv / poly_eval(d, z[i]);
      cplx repulsion{};
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      const cplx step = ratio_i / (1.0 - ratio_i * repulsion);
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) {
        z[i] -= step;
        worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[i])));
      } else {
        worst = INFINITY;
      }
    }
    res.sweeps = sweep;
    res.last_step = worst;
    if (worst <= opt.step_tolerance) {
      res.roots = std::move(z);
      return res;
    }
  }
  std::ostringstream msg;
  msg.precision(6);
  msg << "aberth: no convergence after " << opt.max_sweeps << " sweeps (last step " << res.last_step
      << "); residuals:";
  for (const cplx r : z) msg << " |p(" << r << ")|=" << std::abs(poly_eval(c, r));
  throw ConvergenceError(msg.str());
}

std::vector<cplx> dedup_roots(const std::vector<cplx>& roots, double tol) {
  std::vector<cplx> out;
  std::vector<int> count;
  for (const cplx r : roots) {
    bool merged = false;
    for (std::size_t k = 0; k < out.size() && !merged; ++k) {
      const cplx mean = out[k] / static_cast<double>(count[k]);
      if (std::abs(mean - r) < tol) {
        out[k] += r;
        ++count[k];
        merged = true;
      }
    }
    if (!merged) {
      out.push_back(r);
      count.push_back(1);
    }
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k] /= static_cast<double>(count[k]);
  return out;
}

}  // namespace gl11
