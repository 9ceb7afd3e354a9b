#include "gl11/workbench/jobs.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gl11/errors.hpp"
#include "gl11/workbench/tables.hpp"

namespace gl11::workbench {
namespace {

using Json = nlohmann::ordered_json;

constexpr double kRelationTolerance = 1e-8;

Json number(double x) {
  if (std::isfinite(x)) return x;
  return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

Json params_json(const ModelParameters& p) {
  Json j;
  j["boundary"] = to_string(p.boundary);
  j["n"] = p.n_sites;
  j["eta"] = format_complex(p.eta);
  Json th = Json::array();
  for (const cplx t : p.theta) th.push_back(format_complex(t));
  j["theta"] = th;
  if (p.open()) {
    j["a_minus"] = format_complex(p.a_minus);
    j["a_plus"] = format_complex(p.a_plus);
    j["b_minus"] = format_complex(p.b_minus);
    j["b_plus"] = format_complex(p.b_plus);
    j["f_minus"] = format_complex(p.f_minus);
    j["f_plus"] = format_complex(p.f_plus);
  }
  return j;
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["name"] = r.name;
  j["passed"] = r.passed();
  j["checks"] = r.checks.size();
  j["failures"] = r.failures();
  j["max_residual"] = number(r.max_residual());
  Json items = Json::array();
  for (const CheckResult& c : r.checks) {
    Json item;
    item["family"] = c.family;
    item["label"] = c.label;
    item["residual"] = number(c.residual);
    item["tolerance"] = number(c.tolerance);
    item["passed"] = c.passed;
    if (!c.note.empty()) item["note"] = c.note;
    items.push_back(std::move(item));
  }
  j["results"] = std::move(items);
  return j;
}

Json spectrum_to_json(const Spectrum& s) {
  Json j;
  Json cands = Json::array();
  for (const cplx c : s.candidates) cands.push_back(format_complex(c));
  j["candidates"] = cands;
  double scale = 0.0;
  for (const SpectralLine& l : s.lines)
    if (l.energy) scale = std::max(scale, std::abs(*l.energy));
  Json lines = Json::array();
  for (const SpectralLine& l : s.lines) {
    Json row;
    Json roots = Json::array();
    for (const cplx r : l.roots.finite_roots) roots.push_back(format_complex(r));
    if (l.roots.has_infinite_root) roots.push_back("inf");
    row["roots"] = roots;
    row["M"] = l.roots.m();
    row["energy"] = l.energy ? Json(format_complex(*l.energy, 1e-12 * scale)) : Json(nullptr);
    row["bae_residual"] = number(l.bae_residual);
    lines.push_back(std::move(row));
  }
  j["states"] = lines;
  return j;
}

std::string fmt_g(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

void require_certifiable(const ModelParameters& p) {
  const int limit = p.open() ? 4 : 6;
  if (p.n_sites > limit)
    throw PreconditionError("spectrum certification supports N <= " + std::to_string(limit) +
                            " for the " + to_string(p.boundary) + " chain");
}

bool homogeneous(const ModelParameters& p) {
  for (const cplx t : p.theta)
    if (t != cplx{}) return false;
  return true;
}

}  // namespace

bool JobOutcome::passed() const {
  for (const auto& r : reports)
    if (!r.passed()) return false;
  return true;
}

std::string format_complex(cplx z, double floor) {
  const double cut = std::max(1e-13 * std::abs(z), floor);
  double re = z.real();
  double im = z.imag();
  if (std::abs(re) <= cut) re = 0.0;
  if (std::abs(im) <= cut) im = 0.0;
  if (re == 0.0) re = 0.0;  // drop negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g%c%.12gi", re, std::signbit(im) ? '-' : '+', std::abs(im));
  return buf;
}

JobOutcome run_job(const JobConfig& config) {
  if (!config.job) throw ConfigError(0, "name", "no job selected");
  JobOutcome o;
  o.job = *config.job;
  o.seed = config.seed;
  o.tolerances = config.tolerances;
  const double tol_id = config.tolerances.identities;
  const double tol_sp = config.tolerances.spectral;

  if (o.job == JobKind::ReproduceTables) {
    for (int k = 1; k <= 3; ++k) {
      const ExpectedTable t = reference_table(k, config.tolerances.tables);
      TableOutcome out{k, compute_spectrum(t.params)};
      o.reports.push_back(compare_table(t, out.spectrum));
      VerificationReport cert = certify_spectrum(t.params, out.spectrum, config.seed, tol_sp);
      cert.name = "table" + std::to_string(k) + "-certify";
      o.reports.push_back(std::move(cert));
      o.tables.push_back(std::move(out));
    }
    o.params = o.tables.back().spectrum.params;
    return o;
  }

  const ModelParameters p = config.resolve();
  p.validate();
  o.params = p;
  switch (o.job) {
    case JobKind::VerifyRk:
      o.reports.push_back(verify_rk(p, config.seed, 5, tol_id));
      break;
    case JobKind::VerifyFusion:
      o.reports.push_back(verify_fusion(p, config.seed, 3, tol_id));
      break;
    case JobKind::VerifyIdentities: {
      o.reports.push_back(verify_projection_identities(p, config.seed, tol_id));
      o.reports.push_back(verify_operator_identities(p, tol_id));
      o.reports.push_back(verify_transfer_properties(p, config.seed, tol_id));
      if (p.open()) o.reports.push_back(verify_fusion_products(p, config.seed, tol_id));
      if (p.open() || p.n_sites >= 2) {
        ModelParameters h = p;
        std::fill(h.theta.begin(), h.theta.end(), cplx{});
        o.reports.push_back(verify_hamiltonian(h));
      }
      break;
    }
    case JobKind::Spectrum: {
      require_certifiable(p);
      Spectrum s = compute_spectrum(p);
      o.reports.push_back(certify_spectrum(p, s, config.seed, tol_sp));
      o.reports.push_back(check_spectral_relations(p, s, kRelationTolerance));
      if (homogeneous(p)) o.reports.push_back(check_continuity(p, config.seed));
      o.spectrum = std::move(s);
      break;
    }
    case JobKind::ReproduceTables: break;
  }
  return o;
}

std::string report_json(const JobOutcome& o, std::optional<double> wall_seconds) {
  Json j;
  j["schema"] = 1;
  j["job"] = to_string(o.job);
  j["seed"] = o.seed;
  j["passed"] = o.passed();
  if (o.job != JobKind::ReproduceTables) j["parameters"] = params_json(o.params);
  j["tolerances"] = {{"identities", o.tolerances.identities},
                     {"spectral", o.tolerances.spectral},
                     {"tables", o.tolerances.tables}};
  if (wall_seconds) j["wall_seconds"] = *wall_seconds;
  Json reps = Json::array();
  for (const auto& r : o.reports) reps.push_back(report_to_json(r));
  j["reports"] = std::move(reps);
  if (o.spectrum) j["spectrum"] = spectrum_to_json(*o.spectrum);
  if (!o.tables.empty()) {
    Json tabs = Json::array();
    for (const auto& t : o.tables) {
      Json tj;
      tj["table"] = t.number;
      tj["parameters"] = params_json(t.spectrum.params);
      tj["spectrum"] = spectrum_to_json(t.spectrum);
      tabs.push_back(std::move(tj));
    }
    j["tables"] = std::move(tabs);
  }
  return j.dump(2) + "\n";
}

std::string spectrum_csv(const Spectrum& s) {
  const int n = s.params.n_sites;
  const std::string sym = s.params.open() ? "lambda_" : "mu_";
  double scale = 0.0;
  for (const SpectralLine& l : s.lines)
    if (l.energy) scale = std::max(scale, std::abs(*l.energy));
  std::ostringstream os;
  for (int k = 1; k <= n; ++k) os << sym << k << ",";
  os << "E\n";
  for (const SpectralLine& l : s.lines) {
    int cols = 0;
    for (const cplx r : l.roots.finite_roots) {
      os << format_complex(r) << ",";
      ++cols;
    }
    if (l.roots.has_infinite_root) {
      os << "inf,";
      ++cols;
    }
    for (; cols < n; ++cols) os << "--,";
    os << (l.energy ? format_complex(*l.energy, 1e-12 * scale) : std::string("--")) << "\n";
  }
  return os.str();
}

std::string checks_csv(const JobOutcome& o) {
  auto quote = [](const std::string& x) {
    std::string q = "\"";
    for (const char ch : x) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  std::ostringstream os;
  os << "report,family,label,residual,tolerance,passed\n";
  for (const auto& r : o.reports)
    for (const auto& c : r.checks) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6e,%.1e", c.residual, c.tolerance);
      os << r.name << "," << c.family << "," << quote(c.label) << "," << buf << ","
         << (c.passed ? "true" : "false") << "\n";
    }
  return os.str();
}

std::string summary_text(const JobOutcome& o) {
  std::ostringstream os;
  for (const auto& r : o.reports)
    os << r.name << ": " << r.checks.size() << " checks, " << r.failures() << " failed, max residual "
       << fmt_g(r.max_residual()) << "\n";
  os << to_string(o.job) << " seed=" << o.seed << ": " << (o.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

void write_atomically(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace gl11::workbench
