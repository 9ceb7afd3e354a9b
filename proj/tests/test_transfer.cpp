#include <gtest/gtest.h>

#include "gl11/poly.hpp"
#include "gl11/random.hpp"
#include "gl11/transfer.hpp"
#include "gl11/verification.hpp"
#include "support.hpp"

using namespace gl11;

namespace {

ModelParameters draw(std::uint64_t seed, int n, Boundary b) {
  SeededDraw d(seed);
  return random_parameters(d, n, b);
}

}  // namespace

TEST(Transfer, SingleSitePeriodicIsEtaTimesIdentity) {
  // str_0 (u I + eta P) = eta I on one site.
  const auto p = draw(1, 1, Boundary::Periodic);
  for (const cplx u : {cplx(0.2, 0.3), cplx(-2.0, 1.0)}) {
    const auto t = transfer(p, Aux::Base, u);
    EXPECT_LT(relative_residual(t, p.eta * GradedOperator::identity(t.domain())), 1e-15);
  }
}

TEST(Transfer, ValueAtInhomogeneityCommutesWithFamily) {
  const auto p = draw(2, 3, Boundary::Periodic);
  const TransferEngine e(p);
  const auto a = e.transfer(Aux::Base, p.theta[0]);
  for (const cplx v : {cplx(0.3, -0.1), cplx(1.1, 0.4)}) {
    const auto b = e.transfer(Aux::Base, v);
    EXPECT_LT(relative_residual(a * b, b * a), 1e-13);
  }
}

TEST(Transfer, OpenLeadingCoefficientIsTwoKappa) {
  for (const int n : {1, 2, 3}) {
    const auto p = draw(20 + n, n, Boundary::Open);
    const TransferEngine e(p);
    PolySamples s;
    s.degree_bound = 2 * n + 2;
    s.nodes = circle_nodes(2 * n + 3, 1.3);
    for (const cplx u : s.nodes) s.operator_values.push_back(e.transfer(Aux::Base, u));
    const auto c = interpolate_operator(s);
    const auto id = e.physical_chain().identity();
    EXPECT_LT(c[2 * n + 2].matrix().frobenius_norm(), 1e-10 * c[2 * n + 1].matrix().frobenius_norm());
    EXPECT_LT(relative_residual(c[2 * n + 1], 2.0 * kappa(p) * id), 1e-10) << n;
  }
}

TEST(Transfer, OpenFamilyCommutesAtAllLevels) {
  const auto p = draw(7, 2, Boundary::Open);
  const TransferEngine e(p);
  for (const Aux aux : {Aux::Base, Aux::Bar, Aux::BarPrime, Aux::Tilde}) {
    const auto a = e.transfer(aux, cplx(0.31, 0.2));
    const auto b = e.transfer(Aux::Base, cplx(-0.7, 0.45));
    EXPECT_LT(relative_residual(a * b, b * a), 1e-12) << aux_name(aux);
  }
}

TEST(Hamiltonian, PeriodicIsSumOfPermutations) {
  const auto p = ModelParameters::homogeneous(3, 1.0, Boundary::Periodic);
  const auto h = hamiltonian(p);
  const Chain chain(std::vector<GradedSpace>(3, GradedSpace::fundamental()));
  const auto perm = super_permutation(GradedSpace::fundamental());
  const auto expected = chain.embed(perm, {0, 1}) + chain.embed(perm, {1, 2}) + chain.embed(perm, {2, 0});
  EXPECT_LT(relative_residual(h, expected), 1e-15);
}

TEST(Hamiltonian, MatchesTransferDerivatives) {
  for (const Boundary b : {Boundary::Periodic, Boundary::Open})
    for (const int n : {2, 3}) {
      auto p = draw(30 + n, n, b);
      std::fill(p.theta.begin(), p.theta.end(), cplx{});
      const auto rep = verify_hamiltonian(p);
      EXPECT_TRUE(rep.passed()) << gl11::testing::failures(rep);
    }
}

TEST(Fermions, CanonicalAnticommutation) {
  const Chain chain(std::vector<GradedSpace>(3, GradedSpace::fundamental()));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const auto ac = annihilator(chain, i) * creator(chain, j) + creator(chain, j) * annihilator(chain, i);
      const auto expected = i == j ? chain.identity() : GradedOperator::zero(chain.space());
      EXPECT_LT(max_abs_diff(ac.matrix(), expected.matrix()), 1e-15);
    }
  const auto n0 = number(chain, 0);
  EXPECT_LT(relative_residual(n0 * n0, n0), 1e-15);
}

TEST(Transfer, PropertySuitePasses) {
  for (const Boundary b : {Boundary::Periodic, Boundary::Open})
    for (const int n : {1, 2, 3}) {
      const auto p = draw(40 + n, n, b);
      const auto props = verify_transfer_properties(p, 40 + n);
      EXPECT_TRUE(props.passed()) << gl11::testing::failures(props);
      const auto ops = verify_operator_identities(p);
      EXPECT_TRUE(ops.passed()) << gl11::testing::failures(ops);
    }
}
