#include "gl11/workbench/tables.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "gl11/errors.hpp"

namespace gl11::workbench {
namespace {

double root_distance(const std::vector<cplx>& want, std::vector<cplx> got) {
  if (want.size() != got.size()) return INFINITY;
  double worst = 0.0;
  for (const cplx w : want) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < got.size(); ++k)
      if (std::abs(got[k] - w) < std::abs(got[best] - w)) best = k;
    worst = std::max(worst, std::abs(got[best] - w));
    got.erase(got.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return worst;
}

std::string row_label(const ExpectedRow& r) {
  std::ostringstream os;
  os.precision(6);
  os << "{";
  for (std::size_t i = 0; i < r.finite.size(); ++i)
    os << (i ? ", " : "") << r.finite[i].real() << (r.finite[i].imag() < 0 ? "" : "+")
       << r.finite[i].imag() << "i";
  if (r.infinite) os << (r.finite.empty() ? "inf" : ", inf");
  os << "} E=" << r.energy;
  return os.str();
}

}  // namespace

ExpectedTable reference_table(int number, double rounded_tolerance) {
  ExpectedTable t;
  t.number = number;
  const double s3 = std::sqrt(3.0);
  switch (number) {
    case 1: {
      t.params = ModelParameters::table1();
      t.tolerance = 1e-9;
      const cplx p(0.5, s3 / 6.0), m(0.5, -s3 / 6.0);
      t.rows = {{{}, false, -3}, {{}, true, -3},       {{m}, false, 0},   {{p}, false, 0},
                {{m}, true, 0},  {{p}, true, 0},       {{p, m}, false, 3}, {{p, m}, true, 3}};
      break;
    }
    case 2: {
      t.params = ModelParameters::table2();
      t.tolerance = 1e-9;
      const cplx p(0.5, 0.5), m(0.5, -0.5), h(0.5, 0.0);
      t.rows = {{{}, false, -4},       {{}, true, -4},         {{p}, false, -2},
                {{m}, false, -2},      {{h}, false, 0},        {{p}, true, -2},
                {{m}, true, -2},       {{h}, true, 0},         {{p, m}, false, 0},
                {{p, h}, false, 2},    {{m, h}, false, 2},     {{p, m}, true, 0},
                {{m, h}, true, 2},     {{p, h}, true, 2},      {{p, m, h}, false, 4},
                {{p, m, h}, true, 4}};
      break;
    }
    case 3: {
      t.params = ModelParameters::table3();
      t.tolerance = rounded_tolerance;
      const cplx r1(-0.5, -1.5235), r2(-0.5, -0.2187), r3(-0.5, -0.5565);
      t.rows = {{{}, false, 2.7667},          {{r1}, false, 2.3777},      {{r2}, false, -0.5911},
                {{r3}, false, 0.9800},        {{r1, r2}, false, -0.9800}, {{r1, r3}, false, 0.5911},
                {{r2, r3}, false, -2.3777},   {{r1, r2, r3}, false, -2.7667}};
      break;
    }
    default: throw PreconditionError("reference_table: number must be 1, 2 or 3");
  }
  return t;
}

VerificationReport compare_table(const ExpectedTable& t, const Spectrum& s) {
  VerificationReport rep;
  rep.name = "table" + std::to_string(t.number);
  rep.params = t.params;
  rep.add("row-count", std::to_string(s.lines.size()) + " computed rows for " +
                           std::to_string(t.rows.size()) + " expected",
          s.lines.size() == t.rows.size() ? 0.0 : INFINITY, 0.0);
  std::vector<bool> used(s.lines.size(), false);
  for (const ExpectedRow& row : t.rows) {
    std::size_t best = s.lines.size();
    double best_d = INFINITY;
    for (std::size_t k = 0; k < s.lines.size(); ++k) {
      const auto& r = s.lines[k].roots;
      if (used[k] || r.has_infinite_root != row.infinite) continue;
      const double d = root_distance(row.finite, r.finite_roots);
      if (d < best_d) {
        best_d = d;
        best = k;
      }
    }
    const std::string label = row_label(row);
    if (best == s.lines.size()) {
      rep.add("roots", label, INFINITY, t.tolerance, "no computed state with this root count");
      rep.add("energy", label, INFINITY, t.tolerance);
      continue;
    }
    used[best] = true;
    const auto& line = s.lines[best];
    rep.add("roots", label, best_d, t.tolerance, "matched " + line.roots.key());
    const double de = line.energy ? std::abs(*line.energy - row.energy) : INFINITY;
    std::ostringstream note;
    note.precision(12);
    if (line.energy) note << "got " << line.energy->real();
    rep.add("energy", label, de, t.tolerance, note.str());
  }
  return rep;
}

}  // namespace gl11::workbench
