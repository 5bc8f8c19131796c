#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ospra/io.hpp"

namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ospra_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the CLI with stdout/stderr captured into files under dir_.
  int run(const std::string& args) {
    const std::string cmd = std::string(OSPRA_CLI_PATH) + " " + args + " > " + path("stdout").string() + " 2> " +
                            path("stderr").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path path(const std::string& name) const { return dir_ / name; }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
  }

  fs::path dir_;
};

TEST_F(Cli, GenThenSolveRoundTrips) {
  ASSERT_EQ(run("gen --k 8 --d 0.5 --seed 3 --out " + path("inst.json").string()), 0);
  const auto inst = ospra::instance_from_json(slurp(path("inst.json")));
  EXPECT_EQ(inst.size(), 8u);
  EXPECT_EQ(inst.r_req, 100.0);
  for (const char* protocol : {"osp", "fsp", "direct"}) {
    ASSERT_EQ(run("solve --input " + path("inst.json").string() + " --protocol " + protocol + " --output json"), 0)
        << slurp(path("stderr"));
    const auto alloc = ospra::allocation_from_json(slurp(path("stdout")));
    EXPECT_EQ(alloc.decisions.size(), 8u);
    EXPECT_GE(alloc.sum_rate, 100.0 - 1e-6);
  }
}

TEST_F(Cli, DirectProtocolClosedForm) {
  write("one.json", R"({"K": 1, "gamma_sr": [0], "gamma_sd": [1], "gamma_rd": [0], "r_req": 2, "epsilon": 0.001})");
  ASSERT_EQ(run("solve --input " + path("one.json").string() + " --protocol direct"), 0);
  const auto alloc = ospra::allocation_from_json(slurp(path("stdout")));
  EXPECT_NEAR(alloc.sum_power, 6.0, 1e-6);
}

TEST_F(Cli, DbmDisplayFlag) {
  write("one.json", R"({"K": 1, "gamma_sr": [0], "gamma_sd": [1], "gamma_rd": [0], "r_req": 2, "epsilon": 0.001})");
  ASSERT_EQ(run("solve --input " + path("one.json").string() + " --protocol direct --dbm"), 0);
  EXPECT_NE(slurp(path("stdout")).find("\"power_unit\": \"dBm\""), std::string::npos);
}

TEST_F(Cli, SweepIsByteDeterministic) {
  const std::string args = "sweep --k 8,16 --d 0.3,0.5 --runs 1 --seed 7 --out ";
  ASSERT_EQ(run(args + path("a.csv").string()), 0) << slurp(path("stderr"));
  ASSERT_EQ(run(args + path("b.csv").string() + " --threads 2"), 0);
  const auto a = slurp(path("a.csv"));
  EXPECT_EQ(a, slurp(path("b.csv")));
  EXPECT_EQ(a.rfind("K,d,runs,avg_p_osp,avg_p_fsp,avg_p_direct,avg_nsp_frac,avg_nfsp_frac,fallback_count\n", 0), 0u);
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 5);
}

TEST_F(Cli, FailuresExitNonzeroWithDiagnostic) {
  EXPECT_NE(run("solve --input " + path("missing.json").string()), 0);
  EXPECT_NE(slurp(path("stderr")).find("error"), std::string::npos);

  write("bad.json", "{\"K\": 1");
  EXPECT_NE(run("solve --input " + path("bad.json").string()), 0);
  EXPECT_NE(slurp(path("stderr")).find("malformed JSON"), std::string::npos);

  write("dead.json", R"({"K": 1, "gamma_sr": [0], "gamma_sd": [0], "gamma_rd": [0], "r_req": 1, "epsilon": 0.1})");
  EXPECT_NE(run("solve --input " + path("dead.json").string()), 0);
  EXPECT_NE(slurp(path("stderr")).find("error"), std::string::npos);

  EXPECT_NE(run("solve --input " + path("dead.json").string() + " --protocol magic"), 0);
  EXPECT_NE(run("gen --k 8 --d 1.5 --seed 1 --out " + path("x.json").string()), 0);
  EXPECT_NE(run("sweep --k 8 --d 0.5 --runs 0 --seed 1 --out " + path("x.csv").string()), 0);
  EXPECT_NE(run("bogus"), 0);
}

}  // namespace
