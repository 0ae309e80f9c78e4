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

#include "aroqdr/reformulate_socp.h"

#include <random>

#include "Eigen/Eigenvalues"
#include "aroqdr/extract.h"
#include "aroqdr/verify.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace aroqdr {
namespace {

TEST(SigmaCoefficientsTest, ZeroWeights) {
  absl::StatusOr<Eigen::VectorXd> sigma =
      SigmaCoefficients(Eigen::Vector2d::Zero(), Eigen::MatrixXd::Ones(3, 2));
  ASSERT_TRUE(sigma.ok());
  EXPECT_EQ(*sigma, Eigen::Vector3d::Zero());
}

TEST(SigmaCoefficientsTest, ScalarMultiple) {
  absl::StatusOr<Eigen::VectorXd> sigma = SigmaCoefficients(
      Eigen::VectorXd::Constant(1, 2.0), Eigen::Vector2d(1.0, 3.0));
  ASSERT_TRUE(sigma.ok());
  EXPECT_EQ(*sigma, Eigen::Vector2d(2.0, 6.0));
}

TEST(SigmaCoefficientsTest, MatchesDiagonalOfFullSum) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::Vector2d b(unif(rng), unif(rng));
    Eigen::MatrixXd q(3, 2);
    for (int i = 0; i < q.size(); ++i) q(i) = unif(rng);
    Eigen::MatrixXd full = Eigen::MatrixXd::Zero(3, 3);
    for (int j = 0; j < 2; ++j) {
      full += b(j) * Eigen::MatrixXd(q.col(j).asDiagonal());
    }
    absl::StatusOr<Eigen::VectorXd> sigma = SigmaCoefficients(b, q);
    ASSERT_TRUE(sigma.ok());
    EXPECT_LE((*sigma - full.diagonal()).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(SigmaCoefficientsTest, DimensionMismatch) {
  EXPECT_FALSE(
      SigmaCoefficients(Eigen::Vector3d::Zero(), Eigen::MatrixXd::Ones(2, 2))
          .ok());
}

TEST(ProductToSocTest, MembershipMatchesProductInequality) {
  // Variables t, alpha, beta.
  auto var = [](int v) {
    AffineExpr e;
    e.Add(v, 1.0);
    return e;
  };
  const ConeConstraint row = ProductToSoc(var(0), var(1), var(2));
  ASSERT_EQ(row.kind, ConeKind::kSecondOrder);
  // (t, alpha, beta) -> inside iff t^2 <= 4 alpha beta, alpha, beta >= 0.
  EXPECT_LE(RowViolation(row, Eigen::Vector3d(2, 1, 1)), 1e-15);
  EXPECT_GT(RowViolation(row, Eigen::Vector3d(2.1, 1, 1)), 0.0);
  EXPECT_LE(RowViolation(row, Eigen::Vector3d(0, 0, 5)), 1e-15);
  EXPECT_GT(RowViolation(row, Eigen::Vector3d(0, -1, -1)), 0.0);
  EXPECT_LE(RowViolation(row, Eigen::Vector3d(-3, 1.5, 1.5)), 1e-15);
}

TEST(SocRowsForConstraintTest, RowCountAndOrder) {
  const int l = 3;
  const SocpLayout layout = MakeSocpLayout(2, 2, l, 1, 0.5, false, false);
  ConstraintRow row{Eigen::Vector2d(1, 0), Eigen::MatrixXd::Ones(2, l),
                    Eigen::Vector2d(1, -1), 1.0, Eigen::VectorXd::Ones(l)};
  const std::vector<ConeConstraint> rows =
      SocRowsForConstraint(row, 0.5, 1.0, layout, 0);
  ASSERT_EQ(rows.size(), static_cast<size_t>(1 + l + 1 + l + l));
  for (int i = 0; i < 1 + l + 1 + l; ++i) {
    EXPECT_EQ(rows[i].kind, ConeKind::kNonnegative) << i;
  }
  for (int i = 1 + l + 1 + l; i < static_cast<int>(rows.size()); ++i) {
    EXPECT_EQ(rows[i].kind, ConeKind::kSecondOrder);
    EXPECT_EQ(rows[i].entries.size(), 3u);
  }
}

// For fixed (x, y0, W, q) the robust row holds iff its worst case over the
// ball is nonpositive. Check that the SOCP system is feasible in (lambda, s)
// exactly when the eigenvalue-based check of the LMI block passes.
TEST(SocRowsForConstraintTest, AgreesWithEigenvalueCheck) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  int agree = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const AroProblem problem = testing::RandomInstance(rng);
    const int k = problem.k, l = problem.l();
    const double theta = 0.5;
    std::vector<Eigen::MatrixXd> Q;
    for (int j = 0; j < k; ++j) {
      Eigen::VectorXd diag(l);
      for (int p = 0; p < l; ++p) diag(p) = unif(rng);
      Q.push_back(diag.asDiagonal());
    }
    Eigen::VectorXd y0(k);
    Eigen::MatrixXd W(k, l);
    for (int i = 0; i < y0.size(); ++i) y0(i) = 0.3 * unif(rng);
    for (int i = 0; i < W.size(); ++i) W(i) = 0.3 * unif(rng);
    absl::StatusOr<QdrCoefficients> rule =
        MakeQdrCoefficients(theta, y0, W, Q, /*separable=*/true);
    ASSERT_TRUE(rule.ok());
    const Eigen::VectorXd x = Eigen::VectorXd::Zero(problem.n);

    // Fix the rule slots through bounds and solve the SOCP for feasibility.
    absl::StatusOr<ConicProgram> program = ReformulateSocp(problem, theta);
    ASSERT_TRUE(program.ok());
    const auto& layout = std::get<SocpLayout>(*program->layout);
    absl::StatusOr<Eigen::VectorXd> packed =
        PackRule(*program->layout, x, *rule);
    ASSERT_TRUE(packed.ok());
    ConicProgram fixed = *program;
    fixed.objective = AffineExpr();
    if (layout.has_tau()) fixed.objective.Add(layout.tau_offset, 1.0);
    const int rule_end = layout.q_offset + k * l;
    for (int v = 0; v < rule_end; ++v) {
      AffineExpr e(-(*packed)(v));
      e.Add(v, 1.0);
      fixed.AddRow({ConeKind::kZero, {e}});
    }
    absl::StatusOr<Solution> s = Solve(fixed, {});
    ASSERT_TRUE(s.ok());
    const bool socp_feasible = s->status == SolveStatus::kOptimal;

    absl::StatusOr<VerificationReport> report =
        VerifyRobustFeasibility(problem, x, *rule, 1e-7);
    ASSERT_TRUE(report.ok());
    double worst = -1e300;
    for (int i = 0; i < problem.m(); ++i) {
      worst = std::max(worst, report->rows[i].worst_value);
    }
    // Skip borderline draws where either answer is numerically ambiguous.
    if (std::abs(worst) < 1e-5) continue;
    EXPECT_EQ(socp_feasible, worst <= 0.0) << "trial " << trial;
    ++agree;
  }
  EXPECT_GE(agree, 15);
}

TEST(ReformulateAdrSocpTest, ConeDimensionIsOnePlusL) {
  std::mt19937_64 rng(8);
  const AroProblem problem = testing::RandomInstance(rng);
  absl::StatusOr<ConicProgram> program = ReformulateAdrSocp(problem);
  ASSERT_TRUE(program.ok());
  for (const ConeConstraint& row : program->rows) {
    if (row.kind == ConeKind::kSecondOrder) {
      EXPECT_EQ(static_cast<int>(row.entries.size()), problem.l() + 1);
    }
  }
}

}  // namespace
}  // namespace aroqdr
