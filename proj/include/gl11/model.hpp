#pragma once

// The gl(1|1) R-matrix, the boundary K-matrices over the Grassmann algebra
// CG_1, and the parameter record shared by every downstream module.
//
// CG_1 is realized as one extra graded site G = span{|0> even, |1> odd}
// placed at the far left of every open-chain operator. The generator E maps
// |0> to |1>; E^# = -i E. Because G is an ordinary graded factor, E
// anticommutes with every odd operator through the usual super tensor signs.

#include <cstdint>
#include <string>
#include <vector>

#include "gl11/graded.hpp"

namespace gl11 {

enum class Boundary { Periodic, Open };

std::string to_string(Boundary b);

struct ModelParameters {
  int n_sites = 2;
  cplx eta = 1.0;
  std::vector<cplx> theta;  // size n_sites
  cplx a_minus = 1.2;
  cplx a_plus = 0.5;
  cplx b_minus = 1.0;
  cplx b_plus = 1.0;
  cplx f_minus = 1.0;
  cplx f_plus = 1.0;
  Boundary boundary = Boundary::Periodic;

  /// Homogeneous chain (theta = 0) with the default boundary scalars.
  static ModelParameters homogeneous(int n_sites, cplx eta, Boundary boundary);
  /// N = 3, eta = 1, periodic, theta = 0.
  static ModelParameters table1();
  /// N = 4, eta = 1, periodic, theta = 0.
  static ModelParameters table2();
  /// N = 3, eta = 1, a+ = 0.5, a- = 1.2, open, theta = 0.
  static ModelParameters table3();

  bool open() const { return boundary == Boundary::Open; }

  /// Structural validity: N >= 1, theta sized N, eta != 0.
  void validate() const;

  /// Generic-position gate for identity runs: theta pairwise distinct and
  /// |theta_i +- theta_j| not within `tol` of {0, +-eta, +-2 eta} for i != j.
  /// Throws PreconditionError naming the offending pair.
  void require_generic(double tol = 1e-6) const;

  /// Hermitian preset check: a+- real and b+- = conj(f+-).
  bool hermitian() const;

  /// Same parameters with b+- = f+- = 0.
  ModelParameters body() const;
};

/// One-generator Grassmann algebra realized on an auxiliary graded site.
struct GrassmannContext {
  GradedSpace aux_space = GradedSpace::fundamental();
  GradedOperator generator = GradedOperator::unit(GradedSpace::fundamental(), 1, 0);
  cplx adjoint_factor{0.0, -1.0};

  /// E^# = -i E
  GradedOperator adjoint() const { return adjoint_factor * generator; }
};

/// R(u) = [[u+eta],[u, eta],[eta, u],[u-eta]] on V (x) V; equals u I + eta P.
GradedOperator r_matrix(cplx u, cplx eta);

/// K^-(u) = I + u [[a-, b- E], [f- E^#, -a-]] acting on G (x) V.
GradedOperator k_minus(cplx u, const ModelParameters& p,
                       const GrassmannContext& g = {});
/// K^+(u), same form with a+, b+, f+.
GradedOperator k_plus(cplx u, const ModelParameters& p,
                      const GrassmannContext& g = {});

/// a(u) = prod_j (u - theta_j)
cplx a_function(const ModelParameters& p, cplx u);
/// alpha(u) = (1 + u a-) (1 + (u + eta) a+) prod_j (u + theta_j + eta)(u - theta_j + eta)
cplx alpha_function(const ModelParameters& p, cplx u);
/// Half the u^(2N+1) coefficient of the open t(u):
/// kappa = a+ + a- + N a+ a- eta. The N comes from the eta P_{0j} terms of
/// T and T^hat; alpha(u) - alpha(-u-eta) has the same leading coefficient.
cplx kappa(const ModelParameters& p);

/// Body (E-free part) of an operator on G (x) W: the aux-(0,0) block.
/// Throws StructuralError when the aux-(0,1) block exceeds `tol` relative to
/// the operator scale, which would mean a product is not lower triangular in
/// the Grassmann grading.
GradedOperator grassmann_body(const GradedOperator& a, double tol = 1e-12);

}  // namespace gl11
