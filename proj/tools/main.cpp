// gl11-workbench: verification suites, spectra and table reproduction.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gl11/errors.hpp"
#include "gl11/workbench/config.hpp"
#include "gl11/workbench/jobs.hpp"

namespace wb = gl11::workbench;

namespace {

struct Flags {
  std::string config;
  std::string preset;
  std::optional<int> n;
  std::string eta;
  std::string boundary;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format;
  bool timing = false;
};

void add_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "Configuration file ([model], [job], [tolerances])");
  cmd->add_option("--preset", f.preset, "Parameter preset")
      ->check(CLI::IsMember({"table1", "table2", "table3"}));
  cmd->add_option("--n", f.n, "Number of sites");
  cmd->add_option("--eta", f.eta, "Crossing parameter, e.g. 1 or 0.8+0.1i");
  cmd->add_option("--boundary", f.boundary, "Boundary condition")
      ->check(CLI::IsMember({"periodic", "open"}));
  cmd->add_option("--seed", f.seed, "Seed for random parameters and spectral points");
  cmd->add_option("--out", f.out, "Report file, or directory for reproduce-tables CSV; stdout when omitted");
  cmd->add_option("--format", f.format, "Report format (default csv for spectrum and reproduce-tables, json otherwise)")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--timing", f.timing, "Record wall time in the JSON report (breaks byte identity)");
}

wb::JobConfig build_config(const Flags& f, wb::JobKind job) {
  wb::JobConfig c = f.config.empty() ? wb::JobConfig{} : wb::load_config(f.config);
  if (c.job && *c.job != job)
    throw wb::ConfigError(0, "name", "config selects job '" + wb::to_string(*c.job) +
                                         "' but the command is '" + wb::to_string(job) + "'");
  c.job = job;
  if (!f.preset.empty()) wb::apply_key(c, "model", "preset", f.preset);
  if (f.n) wb::apply_key(c, "model", "n", std::to_string(*f.n));
  if (!f.eta.empty()) wb::apply_key(c, "model", "eta", f.eta);
  if (!f.boundary.empty()) wb::apply_key(c, "model", "boundary", f.boundary);
  if (f.seed) c.seed = *f.seed;
  if (!f.out.empty()) c.out = f.out;
  if (!f.format.empty()) wb::apply_key(c, "job", "format", f.format);
  return c;
}

// The report goes to --out, or to stdout when no path is given.
void write_outputs(const wb::JobConfig& c, const wb::JobOutcome& o, std::optional<double> wall) {
  const bool to_stdout = c.out.empty();
  auto emit = [&](const std::string& path, const std::string& text) {
    if (to_stdout) std::cout << text;
    else wb::write_atomically(path, text);
  };
  if (c.output_format() == wb::OutputFormat::Json) {
    emit(c.out, wb::report_json(o, wall));
  } else if (o.job == wb::JobKind::ReproduceTables) {
    for (const auto& t : o.tables) {
      if (to_stdout && t.number > 1) std::cout << "\n";
      emit((std::filesystem::path(c.out) / ("table" + std::to_string(t.number) + ".csv")).string(),
           wb::spectrum_csv(t.spectrum));
    }
  } else if (o.spectrum) {
    emit(c.out, wb::spectrum_csv(*o.spectrum));
  } else {
    emit(c.out, wb::checks_csv(o));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gl(1|1) spin-chain workbench"};
  app.require_subcommand(1);
  Flags flags;
  const std::pair<wb::JobKind, const char*> commands[] = {
      {wb::JobKind::VerifyRk, "R- and K-matrix identities"},
      {wb::JobKind::VerifyFusion, "Projectors, fused R and K, fused reflection equations"},
      {wb::JobKind::VerifyIdentities, "Projection, operator-product and transfer identities"},
      {wb::JobKind::Spectrum, "Bethe roots, energies and determinant certification"},
      {wb::JobKind::ReproduceTables, "Regenerate and compare the three reference tables"}};
  for (const auto& [kind, help] : commands) add_flags(app.add_subcommand(wb::to_string(kind), help), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  wb::JobKind job = wb::JobKind::Spectrum;
  for (const auto& [kind, help] : commands)
    if (app.got_subcommand(wb::to_string(kind))) job = kind;

  wb::JobConfig config;
  try {
    config = build_config(flags, job);
  } catch (const wb::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  wb::JobOutcome outcome;
  try {
    outcome = wb::run_job(config);
  } catch (const wb::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const gl11::PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  // Summary on stdout when the report goes to a file, else on stderr.
  (config.out.empty() ? std::cerr : std::cout) << wb::summary_text(outcome);
  std::cerr << "wall time " << wall << " s\n";
  try {
    write_outputs(config, outcome, flags.timing ? std::optional<double>(wall) : std::nullopt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return outcome.passed() ? 0 : 1;
}
