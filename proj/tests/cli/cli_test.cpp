/*
 * Copyright 2026 The isingff Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "isingff-cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = isingff::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("isingff_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string out() const { return dir_.string(); }
  fs::path dir_;
};

TEST_F(Cli, SingularVector) {
  const auto r = run({"voa-singular", "--level", "4", "--out", out()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("sign=-1: zero vector; sign=+1: 3·ψ_{-5/2}|0>"), std::string::npos) << r.out;
}

TEST_F(Cli, LatticeVerifyWritesArtifacts) {
  const auto r = run({"lattice-verify", "--m", "2", "--n", "2", "--beta", "0.4", "--out", out()});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("brute-force"), std::string::npos);
  for (const char* f : {"lattice-verify.csv", "lattice-verify_summary.txt", "lattice-verify.gp",
                        "lattice-verify_config.txt"}) {
    EXPECT_TRUE(fs::exists(dir_ / f)) << f;
  }
  EXPECT_EQ(slurp(dir_ / "lattice-verify.csv").rfind("check,value,tolerance,pass\n", 0), 0u);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"lattice-verify", "--nope", "--out", out()}).code, 2);
  EXPECT_EQ(run({"sle-pde", "--kappa", "4", "--out", out()}).code, 2);
  EXPECT_EQ(run({"sle-pde", "--points", "1,0", "--out", out()}).code, 2);
  EXPECT_EQ(run({"sle-pde", "--config", (dir_ / "missing.cfg").string()}).code, 2);
}

TEST_F(Cli, HelpIsNotAnError) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("sle-martingale"), std::string::npos);
}

TEST_F(Cli, ConfigFileAndFlagPrecedence) {
  fs::create_directories(dir_);
  const auto cfg = dir_ / "run.cfg";
  std::ofstream(cfg) << "# small run\npaths = 1000  # comment\ndt=1e-3\nt_max=0.02\nseed=5\nkappa=3\n";
  const auto r = run({"sle-martingale", "--config", cfg.string(), "--seed", "9", "--out", out()});
  // The verdict at 1000 paths is statistical; only parsing is under test.
  EXPECT_NE(r.code, 2) << r.err;
  const auto echo = slurp(dir_ / "sle-martingale_config.txt");
  EXPECT_NE(echo.find("paths=1000"), std::string::npos) << echo;
  EXPECT_NE(echo.find("seed=9"), std::string::npos) << echo;

  std::ofstream(dir_ / "bad.cfg") << "unknown_key=1\n";
  EXPECT_EQ(run({"sle-pde", "--config", (dir_ / "bad.cfg").string(), "--out", out()}).code, 2);
  std::ofstream(dir_ / "junk.cfg") << "no equals sign\n";
  EXPECT_EQ(run({"sle-pde", "--config", (dir_ / "junk.cfg").string(), "--out", out()}).code, 2);
}

TEST_F(Cli, MartingaleCsvIsReproducible) {
  const std::vector<std::string> args = {"sle-martingale", "--paths", "1000", "--dt", "1e-3", "--t-max", "0.02",
                                         "--seed", "3", "--out", out()};
  ASSERT_EQ(run(args).code, 0);
  const auto first = slurp(dir_ / "sle-martingale.csv");
  ASSERT_EQ(run(args).code, 0);
  EXPECT_EQ(slurp(dir_ / "sle-martingale.csv"), first);
  EXPECT_EQ(first.rfind("path_count,t,obs_mean,obs_se,z_score,swallowed_frac", 0), 0u);
  // Header, t = 0 and five checkpoints.
  EXPECT_EQ(std::count(first.begin(), first.end(), '\n'), 7);
}

TEST_F(Cli, ExcessiveSwallowingIsInconclusive) {
  const auto r = run({"sle-martingale", "--paths", "1000", "--dt", "1e-3", "--fields", "0.5:0.3", "--swallow-eps",
                      "0.2", "--out", out()});
  EXPECT_EQ(r.code, 3) << r.out;
}

TEST_F(Cli, CommutatorDiagnostic) {
  EXPECT_EQ(run({"voa-commutators", "--level", "3", "--out", out()}).code, 0);
  const auto r = run({"voa-commutators", "--level", "3", "--a0", "1/16", "--out", out()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("breaks"), std::string::npos);
}

TEST_F(Cli, SummariesNameTheIdentities) {
  EXPECT_NE(run({"cft-ward", "--chart", "moebius", "--out", out()}).out.find("Ward identity"), std::string::npos);
  EXPECT_NE(run({"sle-pde", "--out", out()}).out.find("null-field"), std::string::npos);
  const auto g = run({"sle-generator", "--paths", "1000", "--dt", "1e-3", "--t-max", "0.05", "--out", out()});
  EXPECT_EQ(g.code, 0) << g.out;
  EXPECT_NE(g.out.find("annihilates"), std::string::npos);
}

}  // namespace
