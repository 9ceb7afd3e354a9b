#include <gtest/gtest.h>

#include "gl11/random.hpp"
#include "gl11/verification.hpp"
#include "support.hpp"

using namespace gl11;

namespace {

ModelParameters draw(std::uint64_t seed, int n, Boundary b) {
  SeededDraw d(seed);
  return random_parameters(d, n, b);
}

}  // namespace

TEST(Report, NanResidualFailsAndMergeKeepsOrder) {
  VerificationReport a;
  a.add("x", "first", 1e-12, 1e-10);
  VerificationReport b;
  b.add("y", "second", std::nan(""), 1e-10);
  a.merge(b);
  ASSERT_EQ(a.checks.size(), 2u);
  EXPECT_EQ(a.checks[1].label, "second");
  EXPECT_FALSE(a.passed());
  EXPECT_EQ(a.failures(), 1u);
}

TEST(RandomParameters, DeterministicPerSeed) {
  const auto p = draw(9, 3, Boundary::Open);
  const auto q = draw(9, 3, Boundary::Open);
  EXPECT_EQ(p.theta, q.theta);
  EXPECT_EQ(p.b_plus, q.b_plus);
  EXPECT_NE(p.theta, draw(10, 3, Boundary::Open).theta);
  const double m = std::abs(p.eta);
  EXPECT_GE(m, 0.6);
  EXPECT_LE(m, 1.4);
}

TEST(RkSuite, PassesAndDetectsNoncommutingK) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto rep = verify_rk(draw(seed, 2, Boundary::Open), seed);
    EXPECT_TRUE(rep.passed()) << gl11::testing::failures(rep);
    bool witness = false;
    for (const auto& c : rep.checks) witness |= c.family == "K-noncommuting";
    EXPECT_TRUE(witness);
  }
}

TEST(RkSuite, TighterThanAchievableToleranceFails) {
  const auto rep = verify_rk(draw(1, 2, Boundary::Open), 1, 3, 1e-30);
  EXPECT_FALSE(rep.passed());
}

TEST(IdentitySuites, PassAcrossSeedsAndSizes) {
  for (const Boundary b : {Boundary::Periodic, Boundary::Open})
    for (const int n : {1, 2, 3})
      for (std::uint64_t seed : {3u, 17u}) {
        const auto p = draw(seed * 10 + n, n, b);
        const auto proj = verify_projection_identities(p, seed);
        EXPECT_TRUE(proj.passed()) << gl11::testing::failures(proj);
        if (p.open()) {
          const auto fp = verify_fusion_products(p, seed);
          EXPECT_TRUE(fp.passed()) << gl11::testing::failures(fp);
        }
      }
}
