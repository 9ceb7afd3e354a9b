#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "gl11/errors.hpp"
#include "gl11/workbench/jobs.hpp"
#include "gl11/workbench/tables.hpp"
#include "support.hpp"

using namespace gl11;
using namespace gl11::workbench;

namespace {

std::vector<std::vector<std::string>> split_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

JobConfig job(JobKind k) {
  JobConfig c;
  c.job = k;
  return c;
}

}  // namespace

TEST(FormatComplex, SignsAndCleanup) {
  EXPECT_EQ(format_complex(cplx(0.5, -0.25)), "0.5-0.25i");
  EXPECT_EQ(format_complex(cplx(-0.0, 2.0)), "0+2i");
  EXPECT_EQ(format_complex(cplx(3.0, 1e-16)), "3+0i");
}

TEST(ReferenceTables, ReproducedAndCertified) {
  for (int k = 1; k <= 3; ++k) {
    const ExpectedTable t = reference_table(k);
    const Spectrum s = compute_spectrum(t.params);
    const auto cmp = compare_table(t, s);
    EXPECT_TRUE(cmp.passed()) << gl11::testing::failures(cmp);
    const auto cert = certify_spectrum(t.params, s, 0);
    EXPECT_TRUE(cert.passed()) << gl11::testing::failures(cert);
  }
}

TEST(ReferenceTables, ComparisonDetectsWrongEnergy) {
  ExpectedTable t = reference_table(1);
  t.rows[2].energy += 1e-3;
  EXPECT_FALSE(compare_table(t, compute_spectrum(t.params)).passed());
}

TEST(ReferenceTables, ThirdTableRoundedToleranceIsTight) {
  // The rounded roots agree to about 3.5e-5; a 1e-5 tolerance must fail.
  const ExpectedTable t = reference_table(3, 1e-5);
  EXPECT_FALSE(compare_table(t, compute_spectrum(t.params)).passed());
}

TEST(GoldenCsv, TablesMatch) {
  for (int k = 1; k <= 3; ++k) {
    const ExpectedTable t = reference_table(k);
    const auto got = split_csv(spectrum_csv(compute_spectrum(t.params)));
    const auto want = split_csv(read_file(std::string(GL11_GOLDEN_DIR) + "/table" + std::to_string(k) + ".csv"));
    ASSERT_EQ(got.size(), want.size()) << k;
    EXPECT_EQ(got[0], want[0]);
    for (std::size_t r = 1; r < got.size(); ++r) {
      ASSERT_EQ(got[r].size(), want[r].size());
      for (std::size_t c = 0; c < got[r].size(); ++c) {
        if (want[r][c] == "inf" || want[r][c] == "--") {
          EXPECT_EQ(got[r][c], want[r][c]);
        } else {
          EXPECT_LT(std::abs(parse_complex(got[r][c]) - parse_complex(want[r][c])), 1e-9)
              << "table" << k << " row " << r << " col " << c;
        }
      }
    }
  }
}

TEST(Reports, ByteIdenticalForSameSeed) {
  for (const JobKind k : {JobKind::VerifyRk, JobKind::VerifyIdentities, JobKind::Spectrum}) {
    JobConfig c = job(k);
    c.seed = 11;
    c.n_sites = 2;
    c.boundary = Boundary::Open;
    const std::string a = report_json(run_job(c));
    const std::string b = report_json(run_job(c));
    EXPECT_EQ(a, b) << to_string(k);
    EXPECT_EQ(a.find("wall_seconds"), std::string::npos);
  }
}

TEST(Reports, TimingOnlyWhenRequested) {
  const auto o = run_job(job(JobKind::VerifyRk));
  EXPECT_NE(report_json(o, 0.5).find("\"wall_seconds\": 0.5"), std::string::npos);
}

TEST(Jobs, AllKindsPassOnDefaults) {
  for (const JobKind k : {JobKind::VerifyRk, JobKind::VerifyFusion, JobKind::VerifyIdentities,
                          JobKind::Spectrum, JobKind::ReproduceTables}) {
    const auto o = run_job(job(k));
    for (const auto& r : o.reports) EXPECT_TRUE(r.passed()) << gl11::testing::failures(r);
  }
}

TEST(Jobs, SpectrumSizeLimit) {
  JobConfig c = job(JobKind::Spectrum);
  c.boundary = Boundary::Open;
  c.n_sites = 5;
  EXPECT_THROW(run_job(c), PreconditionError);
}

TEST(Jobs, CsvOfChecksHasHeaderAndRows) {
  const auto o = run_job(job(JobKind::VerifyRk));
  const auto rows = split_csv(checks_csv(o));
  ASSERT_GT(rows.size(), 1u);
  EXPECT_EQ(rows[0].front(), "report");
  EXPECT_EQ(rows.size() - 1, o.reports.front().checks.size());
}
