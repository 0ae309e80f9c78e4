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

#include "aroqdr/verify.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "Eigen/Eigenvalues"
#include "absl/strings/str_cat.h"
#include "aroqdr/trust_region.h"

namespace aroqdr {

RowQuadratic RobustRowQuadratic(const ConstraintRow& row,
                                const Eigen::VectorXd& x,
                                const QdrCoefficients& rule) {
  const int l = rule.l();
  RowQuadratic quadratic;
  quadratic.M = Eigen::MatrixXd::Zero(l, l);
  for (int j = 0; j < rule.k(); ++j) {
    quadratic.M += (1.0 - rule.theta) * row.b(j) * rule.Q[j];
  }
  quadratic.g =
      row.A.transpose() * x + rule.theta * rule.W.transpose() * row.b - row.d;
  quadratic.c = row.a.dot(x) + rule.theta * row.b.dot(rule.y0) - row.d0;
  return quadratic;
}

absl::StatusOr<VerificationReport> VerifyRobustFeasibility(
    const AroProblem& problem, const Eigen::VectorXd& x,
    const QdrCoefficients& rule, double tol, std::optional<double> tau) {
  if (x.size() != problem.n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "x has ", x.size(), " entries, problem has n = ", problem.n));
  }
  if (const std::vector<Diagnostic> diagnostics =
          ValidateRule(rule, problem.k, problem.l());
      !diagnostics.empty()) {
    return absl::InvalidArgumentError(FormatDiagnostics(diagnostics));
  }
  VerificationReport report;
  report.tolerance = tol;
  report.max_violation = -std::numeric_limits<double>::infinity();
  const double radius = problem.uncertainty.radius;
  auto check = [&](const RowQuadratic& quadratic, std::string name) {
    const TrustRegionResult worst =
        WorstCaseQuadratic(quadratic.M, quadratic.g, quadratic.c, radius);
    report.rows.push_back(
        {std::move(name), worst.value, worst.argmax, "exact"});
    report.max_violation = std::max(report.max_violation, worst.value);
  };
  for (int i = 0; i < problem.m(); ++i) {
    check(RobustRowQuadratic(problem.rows[i], x, rule),
          absl::StrCat("row ", i));
  }
  if (problem.w.has_value() && tau.has_value()) {
    ConstraintRow objective;
    objective.a = Eigen::VectorXd::Zero(problem.n);
    objective.A = Eigen::MatrixXd::Zero(problem.n, problem.l());
    objective.b = *problem.w;
    objective.d0 = *tau;
    objective.d = Eigen::VectorXd::Zero(problem.l());
    check(RobustRowQuadratic(objective, x, rule), "objective");
  }
  report.feasible = report.max_violation <= tol;
  return report;
}

nlohmann::json ReportToJson(const VerificationReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const RowVerification& row : report.rows) {
    rows.push_back(
        {{"name", row.name},
         {"worst_value", row.worst_value},
         {"maximizer",
          std::vector<double>(row.maximizer.data(),
                              row.maximizer.data() + row.maximizer.size())},
         {"method", row.method}});
  }
  return {{"feasible", report.feasible},
          {"max_violation", report.max_violation},
          {"tolerance", report.tolerance},
          {"rows", rows}};
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> SLemmaMatrices(
    const RowQuadratic& quadratic, double radius) {
  const int l = static_cast<int>(quadratic.g.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(l + 1, l + 1);
  a(0, 0) = radius * radius;
  a.bottomRightCorner(l, l) = -Eigen::MatrixXd::Identity(l, l);
  Eigen::MatrixXd b(l + 1, l + 1);
  b(0, 0) = -quadratic.c;
  b.block(0, 1, 1, l) = -0.5 * quadratic.g.transpose();
  b.block(1, 0, l, 1) = -0.5 * quadratic.g;
  b.bottomRightCorner(l, l) = -0.5 * (quadratic.M + quadratic.M.transpose());
  return {a, b};
}

absl::StatusOr<bool> SLemmaCertificate(const Eigen::MatrixXd& a,
                                       const Eigen::MatrixXd& b, double lambda,
                                       double tol) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    return absl::InvalidArgumentError("A and B must be square of equal size");
  }
  const double asym = std::max((a - a.transpose()).cwiseAbs().maxCoeff(),
                               (b - b.transpose()).cwiseAbs().maxCoeff());
  if (a.size() > 0 && asym > kSymmetryTolerance * (1.0 + a.norm() + b.norm())) {
    return absl::InvalidArgumentError(
        absl::StrCat("asymmetric input (max |X - X'| = ", asym, ")"));
  }
  if (lambda < 0.0) {
    return absl::InvalidArgumentError("lambda must be nonnegative");
  }
  const Eigen::MatrixXd p = b - lambda * a;
  if (p.size() == 0) return true;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(p, Eigen::EigenvaluesOnly);
  return eig.eigenvalues()(0) >= -tol * (1.0 + p.norm());
}

Eigen::VectorXd SampleBall(int dim, double radius, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  Eigen::VectorXd z(dim);
  double norm = 0.0;
  while (norm == 0.0) {
    for (int p = 0; p < dim; ++p) z(p) = normal(rng);
    norm = z.norm();
  }
  return z * (radius * std::pow(uniform(rng), 1.0 / dim) / norm);
}

absl::StatusOr<double> SampleFeasibility(const AroProblem& problem,
                                         const Eigen::VectorXd& x,
                                         const QdrCoefficients& rule,
                                         int num_samples, uint64_t seed) {
  if (num_samples < 1) {
    return absl::InvalidArgumentError("num_samples must be at least 1");
  }
  std::mt19937_64 rng(seed);
  double worst = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < num_samples; ++s) {
    const Eigen::VectorXd z =
        SampleBall(problem.l(), problem.uncertainty.radius, rng);
    absl::StatusOr<Eigen::VectorXd> residuals =
        ConstraintResiduals(problem, x, rule, z);
    if (!residuals.ok()) return residuals.status();
    worst = std::max(worst, residuals->maxCoeff());
  }
  return worst;
}

}  // namespace aroqdr
