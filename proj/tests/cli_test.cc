// Copyright 2026 The AroQdr Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the installed binary end to end. AROQDR_CLI_PATH is set by the build.

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "aroqdr/problem_io.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace aroqdr {
namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult RunCli(const std::string& args) {
  const std::string out = ::testing::TempDir() + "/cli_output.txt";
  const std::string command =
      std::string(AROQDR_CLI_PATH) + " " + args + " > " + out + " 2>&1";
  const int raw = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  return result;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::mt19937_64 rng(31);
    testing::RandomInstanceOptions options;
    options.w_probability = 1.0;
    problem_ = testing::RandomInstance(rng, options);
    dir_ = ::testing::TempDir();
    problem_path_ = dir_ + "/cli_problem.json";
    ASSERT_TRUE(SaveProblem(problem_, problem_path_).ok());
  }

  AroProblem problem_;
  std::string dir_;
  std::string problem_path_;
};

TEST_F(CliTest, SolveThenVerify) {
  const std::string policy = dir_ + "/cli_policy.json";
  RunResult solve = RunCli("solve " + problem_path_ +
                           " --method sdp --theta 0.5 --out " + policy);
  ASSERT_EQ(solve.exit_code, 0) << solve.output;
  absl::StatusOr<Policy> parsed = LoadPolicy(policy);
  ASSERT_TRUE(parsed.ok()) << parsed.status();
  EXPECT_EQ(parsed->status, "optimal");

  RunResult verify = RunCli("verify " + problem_path_ + " " + policy);
  EXPECT_EQ(verify.exit_code, 0) << verify.output;
}

TEST_F(CliTest, CorruptedPolicyFailsVerification) {
  const std::string policy = dir_ + "/cli_policy_bad.json";
  ASSERT_EQ(RunCli("solve " + problem_path_ + " --method adr --out " + policy)
                .exit_code,
            0);
  absl::StatusOr<Policy> parsed = LoadPolicy(policy);
  ASSERT_TRUE(parsed.ok());
  parsed->x *= -50.0;
  parsed->rule.y0.array() += 25.0;
  ASSERT_TRUE(SavePolicy(*parsed, policy).ok());
  RunResult verify = RunCli("verify " + problem_path_ + " " + policy);
  EXPECT_EQ(verify.exit_code, 1) << verify.output;
  EXPECT_NE(verify.output.find("z*"), std::string::npos) << verify.output;
}

TEST_F(CliTest, MissingFileIsUsageError) {
  RunResult r = RunCli("solve " + dir_ + "/does_not_exist.json");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.output.find("does_not_exist.json"), std::string::npos);
}

TEST_F(CliTest, BadThetaIsUsageError) {
  EXPECT_EQ(RunCli("solve " + problem_path_ + " --theta 2").exit_code, 2);
}

TEST_F(CliTest, ReformulateStatsOnly) {
  RunResult r =
      RunCli("reformulate " + problem_path_ + " --method socp --stats-only");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("rule_dim"), std::string::npos) << r.output;
}

TEST_F(CliTest, SweepPrintsOneLinePerTheta) {
  RunResult r =
      RunCli("sweep " + problem_path_ + " --method sdp --theta 0.5,1");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("theta,value,status"), std::string::npos);
  EXPECT_NE(r.output.find("\n1,"), std::string::npos) << r.output;
}

TEST_F(CliTest, LotSizingIsDeterministic) {
  const std::string args =
      "lotsizing --N 2 --instances 2 --method adr,socp --no-timing --out ";
  ASSERT_EQ(RunCli(args + dir_ + "/ls_a.csv").exit_code, 0);
  ASSERT_EQ(RunCli(args + dir_ + "/ls_b.csv").exit_code, 0);
  auto slurp = [](const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  };
  const std::string a = slurp(dir_ + "/ls_a.csv");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, slurp(dir_ + "/ls_b.csv"));
}

}  // namespace
}  // namespace aroqdr
