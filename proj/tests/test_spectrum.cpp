#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>

#include "gl11/errors.hpp"
#include "gl11/random.hpp"
#include "gl11/spectrum.hpp"
#include "gl11/transfer.hpp"
#include "support.hpp"

using namespace gl11;

namespace {

ModelParameters draw(std::uint64_t seed, int n, Boundary b) {
  SeededDraw d(seed);
  return random_parameters(d, n, b);
}

double matched_error(std::vector<cplx> got, const std::vector<cplx>& want) {
  if (got.size() != want.size()) return 1e300;
  double worst = 0.0;
  for (const cplx w : want) {
    auto it = std::min_element(got.begin(), got.end(),
                               [&](cplx a, cplx b) { return std::abs(a - w) < std::abs(b - w); });
    worst = std::max(worst, std::abs(*it - w));
    got.erase(it);
  }
  return worst;
}

}  // namespace

TEST(PeriodicBae, HomogeneousClosedForm) {
  // ((mu - eta) / mu)^N = 1 gives mu = eta / (1 - omega), omega^N = 1, omega != 1.
  for (const int n : {2, 3, 4, 5, 6})
    for (const cplx eta : {cplx(1.0), cplx(0.8, 0.3)}) {
      std::vector<cplx> want;
      for (int k = 1; k < n; ++k)
        want.push_back(eta / (1.0 - std::polar(1.0, 2.0 * std::numbers::pi * k / n)));
      const auto got = solve_bae_periodic(ModelParameters::homogeneous(n, eta, Boundary::Periodic));
      EXPECT_LT(matched_error(got, want), 1e-10) << n;
    }
}

TEST(PeriodicSpectrum, EnergiesAreTheSpectrumOfH) {
  // Oracle: det(x - H) with H assembled from super permutations, no Bethe
  // input.
  const auto p = ModelParameters::homogeneous(4, 1.0, Boundary::Periodic);
  const auto s = compute_spectrum(p);
  ASSERT_EQ(s.lines.size(), 16u);
  std::vector<cplx> e;
  for (const auto& l : s.lines) e.push_back(*l.energy);
  const Coefficients want = characteristic_polynomial(hamiltonian(p).matrix());
  EXPECT_LT(polynomial_distance(poly_from_roots(e), want, 5.0), 1e-10);
}

TEST(OpenBae, RepresentativesAndTrivialRootRemoval) {
  const auto p = draw(5, 3, Boundary::Open);
  const auto roots = solve_bae_open(p);
  ASSERT_EQ(roots.size(), 3u);
  const Coefficients d = open_bae_polynomial(p);
  EXPECT_LT(std::abs(poly_eval(d, -0.5 * p.eta)), 1e-10);
  for (const cplx r : roots) {
    EXPECT_LT((r + 0.5 * p.eta).imag(), 1e-12);
    EXPECT_GT(std::abs(r + 0.5 * p.eta), 1e-6);
    EXPECT_LT(std::abs(poly_eval(d, r)), 1e-8);
    EXPECT_LT(std::abs(poly_eval(d, -r - p.eta)), 1e-8);
  }
}

TEST(States, CountAndOrder) {
  for (const Boundary b : {Boundary::Periodic, Boundary::Open}) {
    const auto p = draw(3, 3, b);
    const auto cand = b == Boundary::Open ? solve_bae_open(p) : solve_bae_periodic(p);
    const auto states = enumerate_states(p, cand);
    EXPECT_EQ(states.size(), 8u);
    for (std::size_t k = 1; k < states.size(); ++k) EXPECT_LE(states[k - 1].m(), states[k].m());
    std::vector<std::string> keys;
    for (const auto& s : states) keys.push_back(s.key());
    std::sort(keys.begin(), keys.end());
    EXPECT_EQ(std::unique(keys.begin(), keys.end()), keys.end());
  }
}

TEST(Energy, RequiresHomogeneousChain) {
  const auto p = draw(3, 2, Boundary::Periodic);
  const BetheRootSet empty{Boundary::Periodic, {}, false};
  EXPECT_THROW(energy(empty, p), PreconditionError);
}

TEST(TqLambda, PoleThrows) {
  const auto p = ModelParameters::homogeneous(3, 1.0, Boundary::Periodic);
  const BetheRootSet one{Boundary::Periodic, {cplx(0.5, 0.3)}, false};
  EXPECT_THROW(tq_lambda(one, p, Aux::Base, cplx(0.5, 0.3)), DomainError);
  EXPECT_NO_THROW(tq_lambda(one, p, Aux::Base, cplx(0.1, 0.2)));
}

TEST(CharacteristicPolynomial, DiagonalAndDistance) {
  const cplx d[] = {1.0, cplx(0, 2), -3.0};
  const Coefficients c = characteristic_polynomial(CMatrix::diagonal(d));
  const Coefficients want = poly_from_roots(d);
  EXPECT_LT(polynomial_distance(c, want, 4.0), 1e-14);
  Coefficients off = want;
  off[0] += 1e-3;
  EXPECT_GT(polynomial_distance(off, want, 4.0), 1e-6);
}

TEST(Certification, RandomChainsBothBoundaries) {
  for (const Boundary b : {Boundary::Periodic, Boundary::Open})
    for (const int n : {1, 2, 3, 4}) {
      const auto p = draw(50 + n, n, b);
      const Spectrum s = compute_spectrum(p);
      EXPECT_EQ(s.lines.size(), std::size_t{1} << n);
      const auto cert = certify_spectrum(p, s, 50 + n);
      EXPECT_TRUE(cert.passed()) << gl11::testing::failures(cert);
      const auto rel = check_spectral_relations(p, s);
      EXPECT_TRUE(rel.passed()) << gl11::testing::failures(rel);
    }
}

TEST(Certification, DetectsCorruptedEigenvalue) {
  const auto p = draw(61, 2, Boundary::Periodic);
  Spectrum s = compute_spectrum(p);
  ASSERT_FALSE(s.lines[1].roots.finite_roots.empty());
  s.lines[1].roots.finite_roots[0] += cplx(0.05, 0.0);
  EXPECT_FALSE(certify_spectrum(p, s, 61).passed());
}

TEST(Continuity, HomogeneousLimit) {
  for (const Boundary b : {Boundary::Periodic, Boundary::Open}) {
    const auto rep = check_continuity(ModelParameters::homogeneous(3, 1.0, b), 4);
    EXPECT_TRUE(rep.passed()) << gl11::testing::failures(rep);
  }
}
