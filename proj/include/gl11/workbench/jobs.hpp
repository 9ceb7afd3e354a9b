#pragma once

// Job execution and report serialization for the command-line workbench.

#include <optional>
#include <string>
#include <vector>

#include "gl11/spectrum.hpp"
#include "gl11/verification.hpp"
#include "gl11/workbench/config.hpp"

namespace gl11::workbench {

struct TableOutcome {
  int number = 0;
  Spectrum spectrum;
};

struct JobOutcome {
  JobKind job = JobKind::Spectrum;
  std::uint64_t seed = 0;
  ModelParameters params;
  Tolerances tolerances;
  std::vector<VerificationReport> reports;
  std::optional<Spectrum> spectrum;
  std::vector<TableOutcome> tables;

  bool passed() const;
};

/// Runs the configured job. PreconditionError / ConfigError propagate.
JobOutcome run_job(const JobConfig& config);

/// "re+imi" with 12 significant digits per part; components below 1e-13
/// relative to the modulus, or not above `floor`, are written as 0.
std::string format_complex(cplx z, double floor = 0.0);

/// JSON report (schema 1). Byte-identical for identical outcomes.
/// `wall_seconds` is only written when given.
std::string report_json(const JobOutcome& o, std::optional<double> wall_seconds = {});

/// Roots columns then energy, one row per state in canonical order; "inf"
/// marks the infinite root, "--" pads. Energy components below 1e-12 of the
/// largest |E| print as 0.
std::string spectrum_csv(const Spectrum& s);

/// report,family,label,residual,tolerance,passed for every check.
std::string checks_csv(const JobOutcome& o);

/// One line per report: name, check count, failures, max residual.
std::string summary_text(const JobOutcome& o);

/// Writes through a temporary file and a rename.
void write_atomically(const std::string& path, const std::string& content);

}  // namespace gl11::workbench
