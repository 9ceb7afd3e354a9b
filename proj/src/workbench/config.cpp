#include "gl11/workbench/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "gl11/random.hpp"
#include "gl11/verification.hpp"

namespace gl11::workbench {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_real(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  return v;
}

double positive(std::string_view v) {
  const double x = parse_real(v);
  if (!(x > 0.0)) throw std::invalid_argument("must be positive");
  return x;
}

}  // namespace

ConfigError::ConfigError(int line, std::string key, const std::string& what)
    : std::runtime_error(what), line_(line), key_(std::move(key)) {}

std::string to_string(JobKind k) {
  switch (k) {
    case JobKind::VerifyRk: return "verify-rk";
    case JobKind::VerifyFusion: return "verify-fusion";
    case JobKind::VerifyIdentities: return "verify-identities";
    case JobKind::Spectrum: return "spectrum";
    case JobKind::ReproduceTables: return "reproduce-tables";
  }
  return "?";
}

std::optional<JobKind> job_from_string(std::string_view s) {
  for (const JobKind k : {JobKind::VerifyRk, JobKind::VerifyFusion, JobKind::VerifyIdentities,
                          JobKind::Spectrum, JobKind::ReproduceTables})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

cplx parse_complex(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw std::invalid_argument("empty complex value");
  if (s.back() != 'i') return {parse_real(s), 0.0};
  s.remove_suffix(1);
  // Split at the last sign that is not the leading one or an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  auto imag = [](std::string_view t) {
    t = trim(t);
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t);
  };
  if (split == std::string_view::npos) return {0.0, imag(s)};
  return {parse_real(s.substr(0, split)), imag(s.substr(split))};
}

void apply_key(JobConfig& c, std::string_view section, std::string_view key,
               std::string_view value, int line) {
  const std::string k(key);
  try {
    if (section == "model") {
      if (key == "preset") {
        if (value != "table1" && value != "table2" && value != "table3")
          throw std::invalid_argument("unknown preset '" + std::string(value) + "'");
        c.preset = std::string(value);
      } else if (key == "boundary") {
        if (value == "periodic") c.boundary = Boundary::Periodic;
        else if (value == "open") c.boundary = Boundary::Open;
        else throw std::invalid_argument("boundary must be periodic or open");
      } else if (key == "n") {
        const double n = parse_real(value);
        if (n != static_cast<int>(n) || n < 1 || n > 8)
          throw std::invalid_argument("n must be an integer in [1, 8]");
        c.n_sites = static_cast<int>(n);
      } else if (key == "theta") {
        std::vector<cplx> th;
        std::string_view rest = value;
        while (!rest.empty()) {
          const auto comma = rest.find(',');
          th.push_back(parse_complex(rest.substr(0, comma)));
          rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
        c.theta = std::move(th);
      } else if (key == "eta") {
        c.eta = parse_complex(value);
        if (*c.eta == cplx{}) throw std::invalid_argument("eta must be nonzero");
      } else if (key == "a_minus") c.a_minus = parse_complex(value);
      else if (key == "a_plus") c.a_plus = parse_complex(value);
      else if (key == "b_minus") c.b_minus = parse_complex(value);
      else if (key == "b_plus") c.b_plus = parse_complex(value);
      else if (key == "f_minus") c.f_minus = parse_complex(value);
      else if (key == "f_plus") c.f_plus = parse_complex(value);
      else throw std::invalid_argument("unknown key");
    } else if (section == "job") {
      if (key == "name") {
        c.job = job_from_string(value);
        if (!c.job) throw std::invalid_argument("unknown job '" + std::string(value) + "'");
      } else if (key == "seed") {
        std::uint64_t s = 0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), s);
        if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size())
          throw std::invalid_argument("seed must be an unsigned 64-bit integer");
        c.seed = s;
      } else if (key == "out") {
        c.out = std::string(value);
      } else if (key == "format") {
        if (value == "json") c.format = OutputFormat::Json;
        else if (value == "csv") c.format = OutputFormat::Csv;
        else throw std::invalid_argument("format must be json or csv");
      } else {
        throw std::invalid_argument("unknown key");
      }
    } else if (section == "tolerances") {
      if (key == "identities") c.tolerances.identities = positive(value);
      else if (key == "spectral") c.tolerances.spectral = positive(value);
      else if (key == "tables") c.tolerances.tables = positive(value);
      else throw std::invalid_argument("unknown key");
    } else {
      throw std::invalid_argument("unknown section [" + std::string(section) + "]");
    }
  } catch (const std::invalid_argument& e) {
    std::ostringstream msg;
    if (line > 0) msg << "line " << line << ": ";
    msg << "[" << section << "] " << k << ": " << e.what();
    throw ConfigError(line, k, msg.str());
  }
}

JobConfig parse_config(std::string_view text) {
  JobConfig c;
  std::string section;
  std::set<std::string> seen;
  int line_no = 0;
  bool any = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find_first_of("#;"); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    any = true;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(line_no, "", "line " + std::to_string(line_no) + ": unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section != "model" && section != "job" && section != "tolerances")
        throw ConfigError(line_no, section, "line " + std::to_string(line_no) + ": unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(line_no, std::string(line), "line " + std::to_string(line_no) + ": expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (section.empty())
      throw ConfigError(line_no, key, "line " + std::to_string(line_no) + ": key '" + key + "' outside a section");
    if (!seen.insert(section + "." + key).second)
      throw ConfigError(line_no, key, "line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    apply_key(c, section, key, value, line_no);
  }
  if (!any) throw ConfigError(0, "", "empty configuration");
  return c;
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(0, "", "cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

OutputFormat JobConfig::output_format() const {
  if (format) return *format;
  return job && (*job == JobKind::Spectrum || *job == JobKind::ReproduceTables) ? OutputFormat::Csv
                                                                               : OutputFormat::Json;
}

ModelParameters JobConfig::resolve() const {
  ModelParameters p;
  const bool verify = job && *job != JobKind::Spectrum && *job != JobKind::ReproduceTables;
  if (preset) {
    if (n_sites || boundary || theta)
      throw ConfigError(0, "preset", "a preset fixes n, boundary and theta");
    p = *preset == "table1" ? ModelParameters::table1()
        : *preset == "table2" ? ModelParameters::table2()
                              : ModelParameters::table3();
  } else {
    const int n = n_sites.value_or(3);
    const Boundary b = boundary.value_or(Boundary::Periodic);
    if (verify) {
      SeededDraw draw(seed);
      p = random_parameters(draw, n, b);
    } else {
      p = ModelParameters::homogeneous(n, 1.0, b);
    }
  }
  if (eta) p.eta = *eta;
  if (a_minus) p.a_minus = *a_minus;
  if (a_plus) p.a_plus = *a_plus;
  if (b_minus) p.b_minus = *b_minus;
  if (b_plus) p.b_plus = *b_plus;
  if (f_minus) p.f_minus = *f_minus;
  if (f_plus) p.f_plus = *f_plus;
  if (theta) {
    if (static_cast<int>(theta->size()) != p.n_sites)
      throw ConfigError(0, "theta", "theta has " + std::to_string(theta->size()) +
                                        " entries, expected n = " + std::to_string(p.n_sites));
    p.theta = *theta;
  }
  return p;
}

}  // namespace gl11::workbench
