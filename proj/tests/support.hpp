#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include "gl11/graded.hpp"
#include "gl11/verification.hpp"

namespace gl11::testing {

inline CMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> d;
  CMatrix m(rows, cols);
  for (auto& z : m.data()) z = {d(rng), d(rng)};
  return m;
}

/// Random operator of definite parity on `space`.
inline GradedOperator random_homogeneous(std::mt19937_64& rng, const GradedSpace& space,
                                         int parity) {
  GradedOperator a(space, random_matrix(rng, space.dim(), space.dim()));
  for (std::size_t r = 0; r < space.dim(); ++r)
    for (std::size_t c = 0; c < space.dim(); ++c)
      if (((space.parity(r) + space.parity(c)) & 1) != parity) a(r, c) = 0.0;
  return a;
}

inline GradedOperator random_operator(std::mt19937_64& rng, const GradedSpace& space) {
  return {space, random_matrix(rng, space.dim(), space.dim())};
}

/// Failed checks of a report, one per line, for assertion messages.
inline std::string failures(const VerificationReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks)
    if (!c.passed)
      os << r.name << " " << c.family << " [" << c.label << "] residual " << c.residual
         << " > " << c.tolerance << (c.note.empty() ? "" : " (" + c.note + ")") << "\n";
  return os.str();
}

}  // namespace gl11::testing
