#include "gl11/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gl11/errors.hpp"

namespace gl11 {

std::string to_string(Boundary b) { return b == Boundary::Open ? "open" : "periodic"; }

ModelParameters ModelParameters::homogeneous(int n_sites, cplx eta, Boundary boundary) {
  ModelParameters p;
  p.n_sites = n_sites;
  p.eta = eta;
  p.theta.assign(static_cast<std::size_t>(std::max(n_sites, 0)), 0.0);
  p.boundary = boundary;
  return p;
}

ModelParameters ModelParameters::table1() { return homogeneous(3, 1.0, Boundary::Periodic); }
ModelParameters ModelParameters::table2() { return homogeneous(4, 1.0, Boundary::Periodic); }

ModelParameters ModelParameters::table3() {
  ModelParameters p = homogeneous(3, 1.0, Boundary::Open);
  p.a_plus = 0.5;
  p.a_minus = 1.2;
  return p;
}

void ModelParameters::validate() const {
  if (n_sites < 1) throw PreconditionError("site count must be at least 1");
  if (theta.size() != static_cast<std::size_t>(n_sites))
    throw PreconditionError("theta must have one entry per site");
  if (eta == cplx{}) throw PreconditionError("eta must be nonzero");
}

void ModelParameters::require_generic(double tol) const {
  validate();
  const cplx forbidden[] = {0.0, eta, -eta, 2.0 * eta, -2.0 * eta};
  for (std::size_t i = 0; i < theta.size(); ++i) {
    for (std::size_t j = i + 1; j < theta.size(); ++j) {
      for (const cplx c : {theta[i] - theta[j], theta[i] + theta[j]}) {
        for (const cplx f : forbidden) {
          if (std::abs(c - f) < tol) {
            std::ostringstream msg;
            msg << "theta_" << i + 1 << " and theta_" << j + 1
                << " are not in generic position";
            throw PreconditionError(msg.str());
          }
        }
      }
    }
  }
}

bool ModelParameters::hermitian() const {
  auto real = [](cplx z) { return std::abs(z.imag()) <= 1e-14 * (1.0 + std::abs(z)); };
  return real(a_plus) && real(a_minus) && std::abs(b_plus - std::conj(f_plus)) < 1e-14 &&
         std::abs(b_minus - std::conj(f_minus)) < 1e-14;
}

ModelParameters ModelParameters::body() const {
  ModelParameters p = *this;
  p.b_minus = p.b_plus = p.f_minus = p.f_plus = 0.0;
  return p;
}

cplx a_function(const ModelParameters& p, cplx u) {
  cplx out = 1.0;
  for (const cplx th : p.theta) out *= u - th;
  return out;
}

cplx alpha_function(const ModelParameters& p, cplx u) {
  cplx out = (1.0 + u * p.a_minus) * (1.0 + (u + p.eta) * p.a_plus);
  for (const cplx th : p.theta) out *= (u + th + p.eta) * (u - th + p.eta);
  return out;
}

cplx kappa(const ModelParameters& p) {
  return p.a_plus + p.a_minus + static_cast<double>(p.n_sites) * p.a_plus * p.a_minus * p.eta;
}

GradedOperator r_matrix(cplx u, cplx eta) {
  CMatrix m(4, 4);
  m(0, 0) = u + eta;
  m(1, 1) = u;
  m(1, 2) = eta;
  m(2, 1) = eta;
  m(2, 2) = u;
  m(3, 3) = u - eta;
  const GradedSpace v = GradedSpace::fundamental();
  return {tensor(v, v), std::move(m)};
}

namespace {

GradedOperator k_matrix(cplx u, cplx a, cplx b, cplx f, const GrassmannContext& g) {
  const GradedSpace v = GradedSpace::fundamental();
  const GradedOperator id_g = GradedOperator::identity(g.aux_space);
  GradedOperator diag = GradedOperator::zero(v);
  diag(0, 0) = a;
  diag(1, 1) = -a;
  GradedOperator k = super_tensor(id_g, GradedOperator::identity(v));
  GradedOperator linear = super_tensor(id_g, diag);
  linear += b * super_tensor(g.generator, GradedOperator::unit(v, 0, 1));
  linear += f * super_tensor(g.adjoint(), GradedOperator::unit(v, 1, 0));
  k += u * linear;
  return k;
}

}  // namespace

GradedOperator k_minus(cplx u, const ModelParameters& p, const GrassmannContext& g) {
  if (!p.open()) throw PreconditionError("k_minus requires an open boundary");
  return k_matrix(u, p.a_minus, p.b_minus, p.f_minus, g);
}

GradedOperator k_plus(cplx u, const ModelParameters& p, const GrassmannContext& g) {
  if (!p.open()) throw PreconditionError("k_plus requires an open boundary");
  return k_matrix(u, p.a_plus, p.b_plus, p.f_plus, g);
}

GradedOperator grassmann_body(const GradedOperator& a, double tol) {
  if (!a.square() || a.domain().dim() % 2 != 0)
    throw PreconditionError("grassmann_body: operator must act on G (x) W");
  const std::size_t half = a.domain().dim() / 2;
  const double scale = std::max(1.0, a.matrix().max_abs());
  CMatrix body(half, half);
  for (std::size_t r = 0; r < half; ++r) {
    for (std::size_t c = 0; c < half; ++c) {
      if (std::abs(a(r, half + c)) > tol * scale)
        throw StructuralError("grassmann_body: aux-(0,1) block is nonzero");
      body(r, c) = a(r, c);
    }
  }
  const auto par = a.domain().parities();
  return {GradedSpace(std::vector<std::uint8_t>(par.begin(), par.begin() + half)),
          std::move(body)};
}

}  // namespace gl11
