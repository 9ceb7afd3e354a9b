#pragma once

// Job configuration: a flat key = value file with [model], [job] and
// [tolerances] sections. Unknown sections or keys, duplicates and malformed
// values are rejected with the offending line and key.
//
//   [model]
//   preset = table3          # or boundary / n / eta / theta / a_minus ...
//   [job]
//   name = spectrum
//   seed = 7
//   [tolerances]
//   spectral = 1e-6

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gl11/model.hpp"

namespace gl11::workbench {

enum class JobKind { VerifyRk, VerifyFusion, VerifyIdentities, Spectrum, ReproduceTables };
enum class OutputFormat { Json, Csv };

std::string to_string(JobKind k);
std::optional<JobKind> job_from_string(std::string_view s);

struct Tolerances {
  double identities = 1e-9;
  double spectral = 1e-6;
  double tables = 1e-4;
};

struct JobConfig {
  std::optional<JobKind> job;
  std::optional<std::string> preset;  // table1 | table2 | table3
  std::optional<int> n_sites;
  std::optional<Boundary> boundary;
  std::optional<cplx> eta, a_minus, a_plus, b_minus, b_plus, f_minus, f_plus;
  std::optional<std::vector<cplx>> theta;
  Tolerances tolerances;
  std::uint64_t seed = 0;
  std::string out;  // empty: no report file
  std::optional<OutputFormat> format;

  /// Explicit format, else CSV for spectrum and reproduce-tables and JSON
  /// for the verification jobs.
  OutputFormat output_format() const;

  /// Concrete parameters. Presets fix N, boundary and theta. Verification
  /// jobs without a preset start from random generic parameters drawn from
  /// the seed; the spectrum job starts from the homogeneous chain. Explicit
  /// keys override either. Throws ConfigError on inconsistent input.
  ModelParameters resolve() const;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, std::string key, const std::string& what);
  int line() const { return line_; }
  const std::string& key() const { return key_; }

 private:
  int line_;
  std::string key_;
};

/// "1", "-0.5", "0.5-1.5235i", "2i", "-i".
cplx parse_complex(std::string_view s);

JobConfig parse_config(std::string_view text);
JobConfig load_config(const std::string& path);

/// Applies one key of a section (shared by the file parser and the CLI).
void apply_key(JobConfig& c, std::string_view section, std::string_view key,
               std::string_view value, int line = 0);

}  // namespace gl11::workbench
