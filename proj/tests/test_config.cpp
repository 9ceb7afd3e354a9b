#include <gtest/gtest.h>

#include "gl11/workbench/config.hpp"

using namespace gl11;
using namespace gl11::workbench;

namespace {

int error_line(std::string_view text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("1"), cplx(1.0));
  EXPECT_EQ(parse_complex(" -0.5 "), cplx(-0.5));
  EXPECT_EQ(parse_complex("0.5-1.5i"), cplx(0.5, -1.5));
  EXPECT_EQ(parse_complex("2i"), cplx(0.0, 2.0));
  EXPECT_EQ(parse_complex("-i"), cplx(0.0, -1.0));
  EXPECT_EQ(parse_complex("1e-3+2e+1i"), cplx(1e-3, 20.0));
  EXPECT_THROW(parse_complex(""), std::invalid_argument);
  EXPECT_THROW(parse_complex("1+xi"), std::invalid_argument);
}

TEST(ParseConfig, FullFile) {
  const auto c = parse_config(R"(
# comment
[model]
boundary = open
n = 2
eta = 0.9+0.1i
theta = 0.1, 0.2-0.3i
a_minus = 1.5   ; trailing comment
[job]
name = spectrum
seed = 42
format = csv
[tolerances]
spectral = 1e-7
)");
  EXPECT_EQ(c.job, JobKind::Spectrum);
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.format, OutputFormat::Csv);
  EXPECT_EQ(c.tolerances.spectral, 1e-7);
  const auto p = c.resolve();
  EXPECT_TRUE(p.open());
  EXPECT_EQ(p.n_sites, 2);
  EXPECT_EQ(p.eta, cplx(0.9, 0.1));
  EXPECT_EQ(p.theta[1], cplx(0.2, -0.3));
  EXPECT_EQ(p.a_minus, cplx(1.5));
}

TEST(ParseConfig, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line(""), 0);
  EXPECT_EQ(error_line("# only comments\n\n"), 0);
  EXPECT_EQ(error_line("[model]\nn = 2\n[bogus]\n"), 3);
  EXPECT_EQ(error_line("[model]\ncolour = red\n"), 2);
  EXPECT_EQ(error_line("n = 2\n"), 1);
  EXPECT_EQ(error_line("[model]\nn = 2\nn = 3\n"), 3);
  EXPECT_EQ(error_line("[model]\nn = 2.5\n"), 2);
  EXPECT_EQ(error_line("[model]\nn = 9\n"), 2);
  EXPECT_EQ(error_line("[model]\neta = 0\n"), 2);
  EXPECT_EQ(error_line("[job]\nseed = -1\n"), 2);
  EXPECT_EQ(error_line("[job]\nformat = xml\n"), 2);
  EXPECT_EQ(error_line("[job]\nname = everything\n"), 2);
  EXPECT_EQ(error_line("[tolerances]\nspectral = -1\n"), 2);
  EXPECT_EQ(error_line("[model]\nno equals sign\n"), 2);
  EXPECT_EQ(error_line("[model\n"), 1);
}

TEST(Resolve, PresetConflictsAndThetaSize) {
  JobConfig c;
  c.job = JobKind::Spectrum;
  c.preset = "table3";
  EXPECT_TRUE(c.resolve().open());
  c.n_sites = 3;
  EXPECT_THROW(c.resolve(), ConfigError);
  JobConfig d;
  d.job = JobKind::Spectrum;
  d.n_sites = 3;
  d.theta = std::vector<cplx>{0.1, 0.2};
  EXPECT_THROW(d.resolve(), ConfigError);
}

TEST(Resolve, VerifyJobsDrawGenericParametersFromSeed) {
  JobConfig c;
  c.job = JobKind::VerifyRk;
  c.seed = 5;
  const auto a = c.resolve();
  const auto b = c.resolve();
  EXPECT_EQ(a.theta, b.theta);
  EXPECT_NO_THROW(a.require_generic());
  c.seed = 6;
  EXPECT_NE(c.resolve().theta, a.theta);
  JobConfig s;
  s.job = JobKind::Spectrum;
  for (const cplx t : s.resolve().theta) EXPECT_EQ(t, cplx{});
}

TEST(JobNames, RoundTrip) {
  for (const JobKind k : {JobKind::VerifyRk, JobKind::VerifyFusion, JobKind::VerifyIdentities,
                          JobKind::Spectrum, JobKind::ReproduceTables})
    EXPECT_EQ(job_from_string(to_string(k)), k);
  EXPECT_FALSE(job_from_string("nope"));
}
