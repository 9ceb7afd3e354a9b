#include <gtest/gtest.h>

#include <algorithm>

#include "gl11/aberth.hpp"
#include "gl11/errors.hpp"

using namespace gl11;

namespace {

double max_root_error(std::vector<cplx> got, std::vector<cplx> want) {
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

TEST(Aberth, RecoversKnownRoots) {
  const std::vector<cplx> roots = {cplx(1, 2), cplx(-0.5, 0.1), 3.0, cplx(0, -1.5), cplx(0.25, 0.25)};
  const auto r = aberth_roots(poly_from_roots(roots));
  ASSERT_EQ(r.roots.size(), roots.size());
  EXPECT_LT(max_root_error(r.roots, roots), 1e-12);
}

TEST(Aberth, RootsOfUnity) {
  Coefficients c(8, 0.0);
  c[0] = -1.0;
  c[7] = 1.0;
  const auto r = aberth_roots(c);
  for (const cplx z : r.roots) EXPECT_NEAR(std::abs(std::pow(z, 7) - 1.0), 0.0, 1e-13);
  EXPECT_EQ(dedup_roots(r.roots).size(), 7u);
}

TEST(Aberth, TrimsNumericallyZeroLeadingTerms) {
  Coefficients c = poly_from_roots(std::vector<cplx>{2.0, -1.0});
  c.push_back(1e-17);
  EXPECT_EQ(trim_leading(c, 1e-13).size(), 3u);
  EXPECT_EQ(aberth_roots(c).roots.size(), 2u);
}

TEST(Aberth, Errors) {
  EXPECT_THROW(aberth_roots({0.0, 0.0}), PreconditionError);
  AberthOptions tight;
  tight.max_sweeps = 1;
  EXPECT_THROW(aberth_roots(poly_from_roots(std::vector<cplx>{1.0, 2.0, 3.0, cplx(0, 4)}), tight),
               ConvergenceError);
}

TEST(Dedup, MergesClusters) {
  auto d = dedup_roots({1.0, cplx(1.0, 1e-10), 2.0, 2.0 + 5e-9});
  ASSERT_EQ(d.size(), 2u);
  std::sort(d.begin(), d.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
  EXPECT_NEAR(std::abs(d[0] - 1.0) + std::abs(d[1] - 2.0), 0.0, 1e-8);
}
