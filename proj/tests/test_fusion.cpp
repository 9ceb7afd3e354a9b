#include <gtest/gtest.h>

#include "gl11/errors.hpp"
#include "gl11/fusion.hpp"
#include "gl11/random.hpp"
#include "gl11/verification.hpp"
#include "support.hpp"

using namespace gl11;

namespace {

const GradedSpace V = GradedSpace::fundamental();
constexpr Aux kFused[] = {Aux::Bar, Aux::Tilde, Aux::BarPrime, Aux::TildePrime};

}  // namespace

TEST(Projector, IdempotentHermitianAndComplementary) {
  const cplx eta(0.8, 0.15);
  for (const auto kind : {ProjectorKind::PlusPair, ProjectorKind::MinusPair,
                          ProjectorKind::SecondMinus, ProjectorKind::SecondPlus}) {
    const Projector pr = projector(kind, eta);
    EXPECT_LT(relative_residual(pr.op * pr.op, pr.op), 1e-14);
    EXPECT_LT(relative_residual(pr.op.adjoint(), pr.op), 1e-15);
    EXPECT_EQ(pr.image.dim(), pr.basis.size());
  }
  const auto sum = projector(ProjectorKind::PlusPair, eta).op + projector(ProjectorKind::MinusPair, eta).op;
  EXPECT_LT(relative_residual(sum, GradedOperator::identity(tensor(V, V))), 1e-14);
}

TEST(Projector, PairProjectorsAreHalfOneMinusAndPlusP) {
  // Ungraded sanity oracle: P^(+-) = (1 -+ P)/2 up to the choice of which
  // pair sits at the degeneracy point u = -eta or u = eta of R.
  const cplx eta(1.0);
  const auto id = GradedOperator::identity(tensor(V, V));
  const auto p = super_permutation(V);
  const auto plus = projector(ProjectorKind::PlusPair, eta).op;
  const auto minus = projector(ProjectorKind::MinusPair, eta).op;
  const double a = relative_residual(plus, 0.5 * (id + p)) + relative_residual(minus, 0.5 * (id - p));
  const double b = relative_residual(plus, 0.5 * (id - p)) + relative_residual(minus, 0.5 * (id + p));
  EXPECT_LT(std::min(a, b), 1e-14);
}

TEST(FusedR, AffineFormMatchesDirectFormula) {
  const cplx eta(0.9, -0.1);
  for (const Aux aux : kFused) {
    const AffineOperator f = fused_r(aux, eta);
    for (const cplx u : {cplx(0.37, 0.21), cplx(-1.3, 0.6)})
      EXPECT_LT(relative_residual(fuse_r_direct(aux, u, eta), f.at(u)), 1e-12) << aux_name(aux);
  }
}

TEST(FusedK, AffineFormMatchesDirectFormula) {
  SeededDraw d(4);
  const auto p = random_parameters(d, 2, Boundary::Open);
  for (const Aux aux : kFused)
    for (const Side side : {Side::Minus, Side::Plus}) {
      const AffineOperator f = fused_k(aux, side, p);
      const cplx u(0.41, -0.33);
      EXPECT_LT(relative_residual(fuse_k_direct(aux, side, u, p), f.at(u)), 1e-11) << aux_name(aux);
    }
}

TEST(Hierarchy, IndexingAndErrors) {
  EXPECT_EQ(aux_from(1, 0), Aux::Base);
  EXPECT_EQ(aux_from(1, 1), Aux::Bar);
  EXPECT_EQ(aux_from(1, 2), Aux::Tilde);
  EXPECT_EQ(aux_from(2, 1), Aux::BarPrime);
  EXPECT_EQ(aux_from(2, 2), Aux::TildePrime);
  EXPECT_THROW(aux_from(1, 3), PreconditionError);
  EXPECT_THROW(aux_from(3, 1), PreconditionError);
  EXPECT_EQ(aux_space(Aux::Bar), (GradedSpace{0, 1}));
  EXPECT_EQ(aux_space(Aux::Tilde), (GradedSpace{1, 0}));
  EXPECT_EQ(aux_space(Aux::BarPrime), (GradedSpace{1, 0}));
  const cplx eta(0.7);
  EXPECT_LT(relative_residual(fuse_r(1, 0, 0.3, eta), r_matrix(0.3, eta)), 1e-15);
}

TEST(FusedK, DirectFormulaThrowsAtVanishingNormalization) {
  SeededDraw d(6);
  const auto p = random_parameters(d, 1, Boundary::Open);
  const cplx h = 0.5 * p.eta;
  const std::pair<Aux, cplx> zeros[] = {
      {Aux::Bar, -h}, {Aux::BarPrime, h}, {Aux::Tilde, h}, {Aux::TildePrime, -h}};
  for (const auto& [aux, u] : zeros) {
    EXPECT_LT(std::abs(k_normalization(aux, Side::Minus, u, p)), 1e-15);
    EXPECT_THROW(fuse_k_direct(aux, Side::Minus, u, p), DomainError) << aux_name(aux);
    // The affine form extends through the removable point.
    const auto near = fuse_k_direct(aux, Side::Minus, u + cplx(1e-5, 0.0), p);
    EXPECT_LT(relative_residual(fused_k(aux, Side::Minus, p).at(u), near), 1e-4);
  }
}

TEST(Fusion, VerificationSuitePasses) {
  for (const int n : {1, 2})
    for (const Boundary b : {Boundary::Periodic, Boundary::Open}) {
      SeededDraw d(100 + n);
      const auto p = random_parameters(d, n, b);
      const auto rep = verify_fusion(p, 100 + n);
      EXPECT_TRUE(rep.passed()) << gl11::testing::failures(rep);
      EXPECT_GT(rep.checks.size(), 10u);
    }
}
