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

#include "aroqdr/problem_io.h"

#include <cstdio>
#include <random>

#include "aroqdr/lotsizing.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace aroqdr {
namespace {

TEST(ProblemIoTest, RandomProblemsRoundTripBitExact) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    AroProblem problem = testing::RandomInstance(rng);
    if (trial % 3 == 0) {
      problem.cost_uncertainty = CostUncertainty{problem.c, 0.1 * trial + 1e-3};
    }
    absl::StatusOr<AroProblem> back = ParseProblem(ProblemToString(problem));
    ASSERT_TRUE(back.ok()) << back.status();
    EXPECT_TRUE(*back == problem) << "trial " << trial;
  }
}

TEST(ProblemIoTest, MissingRadiusNamesTheField) {
  std::mt19937_64 rng(2);
  nlohmann::json json = ProblemToJson(testing::RandomInstance(rng));
  json["uncertainty"].erase("radius");
  absl::StatusOr<AroProblem> problem = ProblemFromJson(json);
  ASSERT_FALSE(problem.ok());
  EXPECT_NE(problem.status().message().find("radius"), std::string::npos)
      << problem.status();
}

TEST(ProblemIoTest, WrongLengthNamesTheRow) {
  std::mt19937_64 rng(4);
  nlohmann::json json = ProblemToJson(testing::RandomInstance(rng));
  json["rows"][0]["b"].push_back(1.0);
  absl::StatusOr<AroProblem> problem = ProblemFromJson(json);
  ASSERT_FALSE(problem.ok());
  EXPECT_NE(problem.status().message().find("rows[0].b"), std::string::npos)
      << problem.status();
}

TEST(ProblemIoTest, SyntaxErrorIsInvalidArgument) {
  absl::StatusOr<AroProblem> problem = ParseProblem("{\"version\": 1,");
  ASSERT_FALSE(problem.ok());
  EXPECT_EQ(problem.status().code(), absl::StatusCode::kInvalidArgument);
}

TEST(ProblemIoTest, MissingFileNamesThePath) {
  absl::StatusOr<AroProblem> problem = LoadProblem("/nonexistent/p.json");
  ASSERT_FALSE(problem.ok());
  EXPECT_NE(problem.status().message().find("/nonexistent/p.json"),
            std::string::npos);
}

TEST(ProblemIoTest, LotSizingExportReimportsCleanly) {
  absl::StatusOr<LotSizingInstance> instance = GenerateInstance(2, 10.0, 9);
  ASSERT_TRUE(instance.ok());
  const AroProblem problem = BuildAro(*instance);
  const std::string path = ::testing::TempDir() + "/lotsizing_n2.json";
  ASSERT_TRUE(SaveProblem(problem, path).ok());
  absl::StatusOr<AroProblem> back = LoadProblem(path);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_TRUE(*back == problem);
  EXPECT_EQ(back->n, 2);
  EXPECT_EQ(back->k, 4);
  EXPECT_EQ(back->l(), 2);
  EXPECT_TRUE(Validate(*back).empty());
  std::remove(path.c_str());
}

TEST(PolicyIoTest, RoundTrip) {
  std::mt19937_64 rng(8);
  Policy policy;
  policy.status = "optimal";
  policy.method = "qdr_sdp";
  policy.solver = "ipm";
  policy.objective = -1.25;
  policy.x = Eigen::Vector3d(1.0 / 3.0, -2.0, 1e-17);
  std::vector<Eigen::MatrixXd> Q = {testing::RandomSymmetric(2, 1.0, rng),
                                    testing::RandomSymmetric(2, 1.0, rng)};
  absl::StatusOr<QdrCoefficients> rule = MakeQdrCoefficients(
      0.3, Eigen::Vector2d(0.1, 0.7), Eigen::Matrix2d{{1, 2}, {3, 4}}, Q);
  ASSERT_TRUE(rule.ok());
  policy.rule = *rule;
  policy.tau = 2.5;
  absl::StatusOr<Policy> back = PolicyFromJson(PolicyToJson(policy));
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_TRUE(*back == policy);
}

}  // namespace
}  // namespace aroqdr
