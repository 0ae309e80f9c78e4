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

#include "aroqdr/solver.h"

#include <random>
#include <string>
#include <thread>
#include <vector>

#include "aroqdr/reformulate_socp.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace aroqdr {
namespace {

AffineExpr Var(int v, double coef = 1.0, double constant = 0.0) {
  AffineExpr e(constant);
  e.Add(v, coef);
  return e;
}

// min x s.t. x >= 3.
ConicProgram LinearToy() {
  ConicProgram program;
  program.AddVariables(1);
  program.objective = Var(0);
  program.AddRow({ConeKind::kNonnegative, {Var(0, 1.0, -3.0)}});
  return program;
}

// min t s.t. [[t, 1], [1, t]] PSD.
ConicProgram PsdToy() {
  ConicProgram program;
  program.AddVariables(1);
  program.objective = Var(0);
  program.AddRow({ConeKind::kPsd, {Var(0), AffineExpr(1.0), Var(0)}, 2});
  return program;
}

// min t s.t. |(2, t - 1)| <= t + 1.
ConicProgram SocToy() {
  ConicProgram program;
  program.AddVariables(1);
  program.objective = Var(0);
  program.AddRow({ConeKind::kSecondOrder,
                  {Var(0, 1.0, 1.0), AffineExpr(2.0), Var(0, 1.0, -1.0)}});
  return program;
}

class BackendTest : public ::testing::TestWithParam<std::string> {};

TEST_P(BackendTest, LinearToy) {
  absl::StatusOr<Solution> s = Solve(LinearToy(), {}, GetParam());
  ASSERT_TRUE(s.ok()) << s.status();
  EXPECT_EQ(s->status, SolveStatus::kOptimal);
  EXPECT_NEAR(s->objective_value, 3.0, 1e-7);
  EXPECT_EQ(s->solver_name, GetParam());
}

TEST_P(BackendTest, SocToy) {
  absl::StatusOr<Solution> s = Solve(SocToy(), {}, GetParam());
  ASSERT_TRUE(s.ok()) << s.status();
  EXPECT_EQ(s->status, SolveStatus::kOptimal);
  EXPECT_NEAR(s->objective_value, 1.0, 1e-7);
}

TEST_P(BackendTest, DetectsInfeasibleLp) {
  // x >= 1 and -x >= 0.
  ConicProgram program;
  program.AddVariables(1);
  program.objective = Var(0);
  program.AddRow({ConeKind::kNonnegative, {Var(0, 1.0, -1.0), Var(0, -1.0)}});
  absl::StatusOr<Solution> s = Solve(program, {}, GetParam());
  ASSERT_TRUE(s.ok()) << s.status();
  EXPECT_EQ(s->status, SolveStatus::kInfeasible);
}

TEST_P(BackendTest, DetectsUnboundedLp) {
  // min -x s.t. x >= 1.
  ConicProgram program;
  program.AddVariables(1);
  program.objective = Var(0, -1.0);
  program.AddRow({ConeKind::kNonnegative, {Var(0, 1.0, -1.0)}});
  absl::StatusOr<Solution> s = Solve(program, {}, GetParam());
  ASSERT_TRUE(s.ok()) << s.status();
  EXPECT_EQ(s->status, SolveStatus::kUnbounded);
}

INSTANTIATE_TEST_SUITE_P(AllBackends, BackendTest,
                         ::testing::Values("ipm", "barrier"));

TEST(InteriorPointTest, PsdToy) {
  absl::StatusOr<Solution> s = Solve(PsdToy(), {});
  ASSERT_TRUE(s.ok()) << s.status();
  EXPECT_EQ(s->status, SolveStatus::kOptimal);
  EXPECT_NEAR(s->objective_value, 1.0, 1e-7);
}

TEST(InteriorPointTest, EqualityRows) {
  // min x0 + 2 x1 s.t. x0 + x1 = 1, x >= 0.
  ConicProgram program;
  program.AddVariables(2);
  program.objective = Var(0);
  program.objective.Add(1, 2.0);
  AffineExpr sum(-1.0);
  sum.Add(0, 1.0).Add(1, 1.0);
  program.AddRow({ConeKind::kZero, {sum}});
  program.AddRow({ConeKind::kNonnegative, {Var(0), Var(1)}});
  absl::StatusOr<Solution> s = Solve(program, {});
  ASSERT_TRUE(s.ok()) << s.status();
  EXPECT_EQ(s->status, SolveStatus::kOptimal);
  EXPECT_NEAR(s->values(0), 1.0, 1e-7);
  EXPECT_NEAR(s->objective_value, 1.0, 1e-7);
}

TEST(SolveTest, BarrierRejectsPsdRows) {
  absl::StatusOr<Solution> s = Solve(PsdToy(), {}, "barrier");
  ASSERT_FALSE(s.ok());
  EXPECT_EQ(s.status().code(), absl::StatusCode::kUnimplemented);
}

TEST(SolveTest, UnknownBackend) {
  EXPECT_EQ(Solve(LinearToy(), {}, "simplex").status().code(),
            absl::StatusCode::kUnimplemented);
}

TEST(SolveTest, UnusedVariableWithCostIsUnbounded) {
  ConicProgram program = LinearToy();
  program.AddVariables(1);
  program.objective.Add(1, 1.0);
  absl::StatusOr<Solution> s = Solve(program, {});
  ASSERT_TRUE(s.ok());
  EXPECT_EQ(s->status, SolveStatus::kUnbounded);
}

// Twenty LP+SOC programs from robust counterparts of random instances.
std::vector<ConicProgram> RegressionSuite() {
  std::mt19937_64 rng(2024);
  std::vector<ConicProgram> suite;
  for (int i = 0; i < 20; ++i) {
    const AroProblem problem = testing::RandomInstance(rng);
    absl::StatusOr<ConicProgram> program =
        i % 2 == 0 ? ReformulateAdrSocp(problem)
                   : ReformulateSocp(problem, 0.04 * i);
    EXPECT_TRUE(program.ok()) << program.status();
    suite.push_back(*program);
  }
  return suite;
}

TEST(RegressionSuiteTest, BackendsAgreeAndSolutionsAreConsistent) {
  const SolverSettings settings;
  for (const ConicProgram& program : RegressionSuite()) {
    absl::StatusOr<Solution> ipm = Solve(program, settings, "ipm");
    absl::StatusOr<Solution> barrier = Solve(program, settings, "barrier");
    ASSERT_TRUE(ipm.ok()) << ipm.status();
    ASSERT_TRUE(barrier.ok()) << barrier.status();
    ASSERT_EQ(ipm->status, SolveStatus::kOptimal) << program.name;
    ASSERT_EQ(barrier->status, SolveStatus::kOptimal) << program.name;
    const double scale = std::max(1.0, std::abs(ipm->objective_value));
    EXPECT_NEAR(ipm->objective_value, barrier->objective_value, 1e-5 * scale);
    for (const Solution* s : {&*ipm, &*barrier}) {
      EXPECT_LE(MaxViolation(program, s->values), 10 * settings.abs_tol)
          << s->solver_name;
      EXPECT_NEAR(s->objective_value, program.objective.Evaluate(s->values),
                  1e-9 * std::max(1.0, std::abs(s->objective_value)));
    }
  }
}

TEST(SolveTest, ConcurrentSolvesMatchSerial) {
  const std::vector<ConicProgram> suite = RegressionSuite();
  std::vector<double> serial(suite.size());
  for (size_t i = 0; i < suite.size(); ++i) {
    serial[i] = Solve(suite[i], {})->objective_value;
  }
  std::vector<double> parallel(suite.size());
  std::vector<std::thread> threads;
  for (size_t i = 0; i < suite.size(); ++i) {
    threads.emplace_back(
        [&, i] { parallel[i] = Solve(suite[i], {})->objective_value; });
  }
  for (std::thread& t : threads) t.join();
  EXPECT_EQ(serial, parallel);
}

}  // namespace
}  // namespace aroqdr
