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

#include "aroqdr/extract.h"

#include <random>

#include "aroqdr/lotsizing.h"
#include "aroqdr/reformulate_sdp.h"
#include "aroqdr/reformulate_socp.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace aroqdr {
namespace {

AroProblem LotSizingWithoutCost() {
  absl::StatusOr<LotSizingInstance> instance = GenerateInstance(2, 10.0, 1);
  EXPECT_TRUE(instance.ok());
  AroProblem problem = BuildAro(*instance);
  problem.w.reset();
  return problem;
}

TEST(ProgramStatsTest, LotSizingTwoStoresSdp) {
  absl::StatusOr<ConicProgram> program =
      ReformulateSdp(LotSizingWithoutCost(), 0.5);
  ASSERT_TRUE(program.ok());
  const ProgramStats stats = ComputeProgramStats(*program);
  EXPECT_EQ(stats.layout_kind, "sdp");
  EXPECT_EQ(stats.rule_dim, 2 + 4 + 8 + 12);
  EXPECT_EQ(stats.psd_max_side, 3);
}

TEST(ProgramStatsTest, SixRobustRowsSocp) {
  // The demand rows and y >= 0 rows of the two-store instance.
  AroProblem problem = LotSizingWithoutCost();
  problem.rows.resize(6);
  absl::StatusOr<ConicProgram> program = ReformulateSocp(problem, 0.5);
  ASSERT_TRUE(program.ok());
  const ProgramStats stats = ComputeProgramStats(*program);
  EXPECT_EQ(stats.layout_kind, "socp");
  EXPECT_EQ(stats.rule_dim, 2 + 4 + 8 + 6 + 24);
  EXPECT_EQ(stats.soc_max_dim, 3);
}

TEST(ProgramStatsTest, UnitDimensions) {
  AroProblem problem;
  problem.n = problem.k = 1;
  problem.uncertainty = {1.0, 1};
  problem.c = Eigen::VectorXd::Ones(1);
  problem.rows = {{-Eigen::VectorXd::Ones(1), Eigen::MatrixXd::Zero(1, 1),
                   Eigen::VectorXd::Ones(1), 0.0, Eigen::VectorXd::Zero(1)}};
  EXPECT_EQ(ComputeProgramStats(*ReformulateSdp(problem, 0.5)).rule_dim, 4);
  EXPECT_EQ(ComputeProgramStats(*ReformulateSocp(problem, 0.5)).rule_dim, 6);
  EXPECT_EQ(ComputeProgramStats(*ReformulateAdrSocp(problem)).rule_dim, 3);
}

TEST(ProgramStatsTest, FormulasOverDimensionGrid) {
  std::mt19937_64 rng(12);
  for (int n = 1; n <= 2; ++n) {
    for (int l = 1; l <= 3; ++l) {
      testing::RandomInstanceOptions options;
      options.w_probability = 0.0;
      AroProblem problem = testing::RandomInstance(rng, options);
      const int k = problem.k;
      const int nn = problem.n;
      const int ll = problem.l();
      const int m = problem.m();
      const ProgramStats sdp =
          ComputeProgramStats(*ReformulateSdp(problem, 0.5));
      const ProgramStats socp =
          ComputeProgramStats(*ReformulateSocp(problem, 0.5));
      EXPECT_EQ(sdp.rule_dim, nn + k + k * ll + k * ll * (ll + 1) / 2);
      EXPECT_EQ(socp.rule_dim, nn + k + k * ll + m + 2 * m * ll);
      EXPECT_EQ(sdp.row_counts.at("psd"), m);
    }
  }
}

TEST(ExtractRuleTest, PackThenExtractIsExact) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const AroProblem problem = testing::RandomInstance(rng);
    const int k = problem.k, l = problem.l();
    std::vector<Eigen::MatrixXd> Q;
    for (int j = 0; j < k; ++j)
      Q.push_back(testing::RandomSymmetric(l, 1.0, rng));
    absl::StatusOr<QdrCoefficients> rule = MakeQdrCoefficients(
        0.25, Eigen::VectorXd::Random(k), Eigen::MatrixXd::Random(k, l), Q);
    ASSERT_TRUE(rule.ok());
    const Eigen::VectorXd x = Eigen::VectorXd::Random(problem.n);
    absl::StatusOr<ConicProgram> program = ReformulateSdp(problem, 0.25);
    ASSERT_TRUE(program.ok());
    absl::StatusOr<Eigen::VectorXd> packed =
        PackRule(*program->layout, x, *rule);
    ASSERT_TRUE(packed.ok());
    absl::StatusOr<ExtractedPolicy> back =
        ExtractRule(*packed, *program->layout);
    ASSERT_TRUE(back.ok());
    EXPECT_EQ(back->x, x);
    EXPECT_TRUE(back->rule == *rule);
  }
}

TEST(ExtractRuleTest, SeparableLayoutGivesDiagonalQ) {
  std::mt19937_64 rng(6);
  const AroProblem problem = testing::RandomInstance(rng);
  absl::StatusOr<ConicProgram> program = ReformulateSocp(problem, 0.5);
  ASSERT_TRUE(program.ok());
  const Eigen::VectorXd values = Eigen::VectorXd::Random(program->num_vars);
  absl::StatusOr<ExtractedPolicy> policy =
      ExtractRule(values, *program->layout);
  ASSERT_TRUE(policy.ok());
  EXPECT_TRUE(policy->rule.separable);
  for (const Eigen::MatrixXd& Q : policy->rule.Q) {
    EXPECT_TRUE(Q.isDiagonal(0.0));
  }
}

TEST(ExtractRuleTest, OffDiagonalSlotFillsBothPositions) {
  const SdpLayout layout = MakeSdpLayout(1, 1, 2, 1, 0.5, false, false, false);
  Eigen::VectorXd values = Eigen::VectorXd::Zero(layout.total);
  values(layout.Q(0, 0, 1)) = 0.375;
  absl::StatusOr<ExtractedPolicy> policy = ExtractRule(values, layout);
  ASSERT_TRUE(policy.ok());
  EXPECT_EQ(policy->rule.Q[0](0, 1), 0.375);
  EXPECT_EQ(policy->rule.Q[0](1, 0), 0.375);
}

TEST(ExtractRuleTest, RejectsShortVectorAndNonOptimalSolution) {
  const SdpLayout layout = MakeSdpLayout(1, 1, 2, 1, 0.5, false, false, false);
  EXPECT_FALSE(ExtractRule(Eigen::VectorXd::Zero(2), layout).ok());
  Solution solution;
  solution.status = SolveStatus::kInfeasible;
  solution.values = Eigen::VectorXd::Zero(layout.total);
  EXPECT_FALSE(ExtractRule(solution, RuleLayout(layout)).ok());
}

}  // namespace
}  // namespace aroqdr
