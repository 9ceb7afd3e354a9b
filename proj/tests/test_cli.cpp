#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gl11_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(const std::string& args) const {
    const std::string cmd = std::string(GL11_CLI) + " " + args + " > " + (dir_ / "stdout").string() +
                            " 2> " + (dir_ / "stderr").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string read(const std::string& name) const {
    std::ifstream in(dir_ / name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, SpectrumPresetPrintsCsv) {
  EXPECT_EQ(run("spectrum --preset table1"), 0);
  EXPECT_EQ(read("stdout").rfind("mu_1,mu_2,mu_3,E\n", 0), 0u);
  EXPECT_NE(read("stdout").find("0.5-0.288675134595i,0.5+0.288675134595i,inf,3+0i"), std::string::npos);
  EXPECT_NE(read("stderr").find("PASS"), std::string::npos);
  EXPECT_NE(read("stderr").find("wall time"), std::string::npos);
}

TEST_F(Cli, SummaryOnStdoutWhenWritingFile) {
  EXPECT_EQ(run("verify-identities --boundary periodic --n 3 --seed 7 --out " + path("r.json")), 0);
  EXPECT_NE(read("stdout").find("verify-identities seed=7: PASS"), std::string::npos);
  EXPECT_NE(read("r.json").find("\"schema\": 1"), std::string::npos);
}

TEST_F(Cli, EmptyConfigExitsTwo) {
  write("empty.ini", "");
  EXPECT_EQ(run("spectrum --config " + path("empty.ini")), 2);
  EXPECT_NE(read("stderr").find("empty configuration"), std::string::npos);
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("spectrum --bogus"), 2);
  EXPECT_EQ(run("spectrum --boundary twisted"), 2);
  EXPECT_EQ(run("spectrum --preset table3 --n 2"), 2);
  EXPECT_EQ(run("verify-rk --n 0"), 2);
  EXPECT_EQ(run("spectrum --boundary open --n 6"), 2);
}

TEST_F(Cli, ConfigJobMustMatchCommand) {
  write("job.ini", "[job]\nname = verify-rk\n");
  EXPECT_EQ(run("spectrum --config " + path("job.ini")), 2);
  EXPECT_EQ(run("verify-rk --config " + path("job.ini")), 0);
}

TEST_F(Cli, FlagsOverrideConfig) {
  write("model.ini", "[model]\nboundary = periodic\nn = 3\n[job]\nformat = csv\n");
  EXPECT_EQ(run("spectrum --config " + path("model.ini") + " --n 2 --out " + path("s.csv")), 0);
  EXPECT_EQ(read("s.csv").rfind("mu_1,mu_2,E\n", 0), 0u);
}

TEST_F(Cli, JsonReportsAreByteIdentical) {
  ASSERT_EQ(run("verify-identities --boundary open --n 2 --seed 3 --out " + path("a.json")), 0);
  ASSERT_EQ(run("verify-identities --boundary open --n 2 --seed 3 --out " + path("b.json")), 0);
  EXPECT_EQ(read("a.json"), read("b.json"));
  EXPECT_EQ(read("a.json").find("wall_seconds"), std::string::npos);
  ASSERT_EQ(run("verify-rk --seed 3 --timing --out " + path("t.json")), 0);
  EXPECT_NE(read("t.json").find("wall_seconds"), std::string::npos);
}

TEST_F(Cli, ReproduceTablesWritesCsvDirectory) {
  ASSERT_EQ(run("reproduce-tables --format csv --out " + path("tables")), 0);
  for (int k = 1; k <= 3; ++k) EXPECT_TRUE(fs::exists(dir_ / "tables" / ("table" + std::to_string(k) + ".csv")));
  EXPECT_EQ(read("tables/table3.csv").rfind("lambda_1,lambda_2,lambda_3,E\n", 0), 0u);
}

TEST_F(Cli, FailedCheckExitsOne) {
  write("strict.ini", "[tolerances]\nidentities = 1e-30\n");
  EXPECT_EQ(run("verify-rk --config " + path("strict.ini")), 1);
  EXPECT_NE(read("stderr").find("FAIL"), std::string::npos);
  EXPECT_NE(read("stdout").find("\"passed\": false"), std::string::npos);
}
