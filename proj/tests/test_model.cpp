#include <gtest/gtest.h>

#include "gl11/errors.hpp"
#include "gl11/model.hpp"
#include "gl11/poly.hpp"
#include "gl11/random.hpp"
#include "gl11/verification.hpp"
#include "support.hpp"

using namespace gl11;

namespace {

const GradedSpace V = GradedSpace::fundamental();

ModelParameters sample_open(std::uint64_t seed, int n) {
  SeededDraw d(seed);
  return random_parameters(d, n, Boundary::Open);
}

}  // namespace

TEST(RMatrix, EqualsIdentityPlusPermutation) {
  const cplx eta(0.9, -0.2), u(0.4, 1.1);
  const auto expected = u * GradedOperator::identity(tensor(V, V)) + eta * super_permutation(V);
  EXPECT_LT(relative_residual(r_matrix(u, eta), expected), 1e-15);
  EXPECT_EQ(r_matrix(u, eta)(0, 0), u + eta);
  EXPECT_EQ(r_matrix(u, eta)(3, 3), u - eta);
}

TEST(RMatrix, UnitarityClosedForm) {
  const cplx eta(1.1, 0.3);
  for (const cplx u : {cplx(0.2, 0.1), cplx(-1.5, 0.7)}) {
    const auto lhs = r_matrix(u, eta) * r_matrix(-u, eta);
    EXPECT_LT(relative_residual(lhs, (eta * eta - u * u) * GradedOperator::identity(tensor(V, V))),
              1e-14);
  }
}

TEST(KMatrix, IdentityAtZeroAndNilpotentGenerator) {
  const auto p = sample_open(2, 2);
  const GrassmannContext g;
  const GradedSpace gv = tensor(g.aux_space, V);
  EXPECT_LT(relative_residual(k_minus(0.0, p, g), GradedOperator::identity(gv)), 1e-15);
  EXPECT_LT(relative_residual(k_plus(0.0, p, g), GradedOperator::identity(gv)), 1e-15);
  EXPECT_EQ((g.generator * g.generator).matrix().frobenius_norm(), 0.0);
  EXPECT_EQ(g.generator.parity(), 1);
}

TEST(KMatrix, BodyIsDiagonal) {
  const auto p = sample_open(3, 1);
  const cplx u(0.3, -0.6);
  const auto body = grassmann_body(k_minus(u, p));
  EXPECT_NEAR(std::abs(body(0, 0) - (1.0 + u * p.a_minus)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(body(1, 1) - (1.0 - u * p.a_minus)), 0.0, 1e-15);
  EXPECT_EQ(body(0, 1), cplx{});
}

TEST(Grassmann, BodyRejectsUpperBlock) {
  const GrassmannContext g;
  const GradedSpace gv = tensor(g.aux_space, V);
  auto bad = GradedOperator::identity(gv);
  bad(0, 2) = 1.0;  // aux (0,1) block: E^dagger direction
  EXPECT_THROW(grassmann_body(bad), StructuralError);
}

TEST(Kappa, MatchesLeadingCoefficientOfAlphaDifference) {
  for (const int n : {1, 2, 3, 4}) {
    const auto p = sample_open(10 + n, n);
    PolySamples s;
    s.degree_bound = 2 * n + 2;
    s.nodes = circle_nodes(2 * n + 3, 1.7);
    for (const cplx u : s.nodes) s.values.push_back(alpha_function(p, u) - alpha_function(p, -u - p.eta));
    const Coefficients c = interpolate(s);
    EXPECT_LT(std::abs(c[2 * n + 2]), 1e-11 * std::abs(c[2 * n + 1]));
    EXPECT_LT(std::abs(c[2 * n + 1] - 2.0 * kappa(p)), 1e-11 * std::abs(kappa(p)) + 1e-12) << n;
  }
}

TEST(Parameters, Presets) {
  EXPECT_EQ(ModelParameters::table1().n_sites, 3);
  EXPECT_EQ(ModelParameters::table2().n_sites, 4);
  const auto t3 = ModelParameters::table3();
  EXPECT_TRUE(t3.open());
  EXPECT_EQ(t3.a_plus, cplx(0.5));
  EXPECT_EQ(t3.a_minus, cplx(1.2));
  EXPECT_TRUE(t3.hermitian());
  const auto body = t3.body();
  EXPECT_EQ(body.b_minus, cplx{});
  EXPECT_EQ(body.f_plus, cplx{});
}

TEST(Parameters, ValidationAndGenericity) {
  ModelParameters p = ModelParameters::homogeneous(3, 1.0, Boundary::Periodic);
  EXPECT_NO_THROW(p.validate());
  p.eta = 0.0;
  EXPECT_THROW(p.validate(), PreconditionError);
  p.eta = 1.0;
  p.theta.pop_back();
  EXPECT_THROW(p.validate(), PreconditionError);
  p.theta = {cplx(0.1, 0.2), cplx(1.1, 0.2), cplx(-0.7, 0.3)};  // theta_2 - theta_1 = eta
  EXPECT_THROW(p.require_generic(), PreconditionError);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SeededDraw d(seed);
    EXPECT_NO_THROW(random_parameters(d, 4, Boundary::Open).require_generic()) << seed;
  }
}
