#pragma once

// Reference Bethe-root tables (N = 3 and 4 periodic, N = 3 open) and the
// comparison against them.

#include <vector>

#include "gl11/spectrum.hpp"

namespace gl11::workbench {

struct ExpectedRow {
  std::vector<cplx> finite;
  bool infinite = false;
  double energy = 0.0;
};

struct ExpectedTable {
  int number = 0;
  ModelParameters params;
  std::vector<ExpectedRow> rows;
  double tolerance = 0.0;  // roots and energies, absolute
};

/// number in {1, 2, 3}. tables 1 and 2 are exact surds (tolerance 1e-9); table 3
/// is rounded to 4 decimals and uses `rounded_tolerance`.
ExpectedTable reference_table(int number, double rounded_tolerance = 1e-4);

/// Matches every reference row to a distinct computed state by root set and
/// compares roots and energy. Unmatched rows fail with residual inf.
VerificationReport compare_table(const ExpectedTable& t, const Spectrum& s);

}  // namespace gl11::workbench
