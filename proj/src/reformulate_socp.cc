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

#include "absl/strings/str_cat.h"
#include "reformulate_common.h"

namespace aroqdr {
namespace {

using internal::LinearCoefficient;
using internal::NominalLhs;

ConeConstraint Scalar(AffineExpr expr, std::string label) {
  ConeConstraint row;
  row.kind = ConeKind::kNonnegative;
  row.entries.push_back(std::move(expr));
  row.label = std::move(label);
  return row;
}

std::vector<ConeConstraint> GroupRows(const ConstraintRow& row, double theta,
                                      double radius, const SocpLayout& layout,
                                      int group, bool with_tau,
                                      const std::string& name) {
  const int l = layout.l;
  const int lambda = layout.lambda(group);
  std::vector<ConeConstraint> rows;

  rows.push_back(
      Scalar(AffineExpr().Add(lambda, 1.0), absl::StrCat("lambda ", name)));
  for (int p = 0; p < l; ++p) {
    rows.push_back(Scalar(AffineExpr().Add(layout.s(p, group), 1.0),
                          absl::StrCat("s ", name, ",", p)));
  }

  AffineExpr budget(row.d0);
  budget.AddScaled(NominalLhs(row, layout, theta), -1.0);
  budget.Add(lambda, -radius * radius);
  for (int p = 0; p < l; ++p) budget.Add(layout.s(p, group), -1.0);
  if (with_tau) budget.Add(layout.tau_offset, 1.0);
  rows.push_back(Scalar(budget, absl::StrCat("budget ", name)));

  // lambda - (1 - theta) sigma_p, with sigma_p expanded over q.
  std::vector<AffineExpr> shifted(l);
  for (int p = 0; p < l; ++p) {
    shifted[p].Add(lambda, 1.0);
    for (int j = 0; j < layout.k; ++j) {
      shifted[p].Add(layout.q(p, j), -(1.0 - theta) * row.b(j));
    }
    rows.push_back(Scalar(shifted[p], absl::StrCat("shift ", name, ",", p)));
  }
  for (int p = 0; p < l; ++p) {
    ConeConstraint cone =
        ProductToSoc(LinearCoefficient(row, layout, theta, p),
                     AffineExpr().Add(layout.s(p, group), 1.0), shifted[p]);
    cone.label = absl::StrCat("cone ", name, ",", p);
    rows.push_back(std::move(cone));
  }
  return rows;
}

absl::StatusOr<ConicProgram> BuildSeparable(const AroProblem& problem,
                                            double theta) {
  const bool has_tau = problem.w.has_value();
  const int groups = problem.m() + (has_tau ? 1 : 0);
  const SocpLayout layout =
      MakeSocpLayout(problem.n, problem.k, problem.l(), groups, theta, has_tau,
                     problem.cost_uncertainty.has_value());
  ConicProgram program;
  program.name = "sep_qdr_socp";
  program.num_vars = layout.total;
  program.layout = layout;
  internal::SetObjective(problem, layout, program);
  const double radius = problem.uncertainty.radius;
  for (int i = 0; i < problem.m(); ++i) {
    for (ConeConstraint& row :
         SocRowsForConstraint(problem.rows[i], theta, radius, layout, i)) {
      program.AddRow(std::move(row));
    }
  }
  if (has_tau) {
    for (ConeConstraint& row :
         ObjectiveSocRows(*problem.w, theta, radius, layout)) {
      program.AddRow(std::move(row));
    }
  }
  return program;
}

// head >= r |tail|, or head >= 0 when the tail is identically zero.
ConeConstraint AdrRow(const ConstraintRow& row, double radius,
                      const AdrLayout& layout, bool with_tau) {
  AffineExpr head(row.d0);
  head.AddScaled(NominalLhs(row, layout, 1.0), -1.0);
  if (with_tau) head.Add(layout.tau_offset, 1.0);
  ConeConstraint cone;
  cone.kind = ConeKind::kSecondOrder;
  cone.entries.push_back(head);
  bool structurally_zero = true;
  for (int p = 0; p < layout.l; ++p) {
    AffineExpr tail;
    tail.AddScaled(LinearCoefficient(row, layout, 1.0, p), radius);
    structurally_zero &= tail.vars.empty() && tail.constant == 0.0;
    cone.entries.push_back(tail);
  }
  if (structurally_zero) {
    cone.kind = ConeKind::kNonnegative;
    cone.entries.resize(1);
  }
  return cone;
}

}  // namespace

absl::StatusOr<Eigen::VectorXd> SigmaCoefficients(const Eigen::VectorXd& b,
                                                  const Eigen::MatrixXd& q) {
  if (q.cols() != b.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "q has ", q.cols(), " columns but b has ", b.size(), " entries"));
  }
  return q * b;
}

ConeConstraint ProductToSoc(const AffineExpr& t, const AffineExpr& alpha,
                            const AffineExpr& beta) {
  ConeConstraint cone;
  cone.kind = ConeKind::kSecondOrder;
  AffineExpr head = alpha;
  head.AddScaled(beta, 1.0);
  AffineExpr difference = alpha;
  difference.AddScaled(beta, -1.0);
  cone.entries = {head, t, difference};
  return cone;
}

std::vector<ConeConstraint> SocRowsForConstraint(const ConstraintRow& row,
                                                 double theta, double radius,
                                                 const SocpLayout& layout,
                                                 int group) {
  return GroupRows(row, theta, radius, layout, group, /*with_tau=*/false,
                   absl::StrCat(group));
}

std::vector<ConeConstraint> ObjectiveSocRows(const Eigen::VectorXd& w,
                                             double theta, double radius,
                                             const SocpLayout& layout) {
  ConstraintRow row;
  row.a = Eigen::VectorXd::Zero(layout.n);
  row.A = Eigen::MatrixXd::Zero(layout.n, layout.l);
  row.b = w;
  row.d = Eigen::VectorXd::Zero(layout.l);
  return GroupRows(row, theta, radius, layout, layout.num_groups - 1,
                   /*with_tau=*/true, "objective");
}

absl::StatusOr<ConicProgram> ReformulateSeparableQdrSocp(
    const AroProblem& problem, double theta) {
  if (absl::Status status = internal::CheckBuilderInput(problem, theta);
      !status.ok()) {
    return status;
  }
  if (problem.w.has_value()) {
    return absl::InvalidArgumentError(
        "problem has an adjustable cost vector w; use "
        "ReformulateObjectiveSocp");
  }
  return BuildSeparable(problem, theta);
}

absl::StatusOr<ConicProgram> ReformulateObjectiveSocp(const AroProblem& problem,
                                                      double theta) {
  if (absl::Status status = internal::CheckBuilderInput(problem, theta);
      !status.ok()) {
    return status;
  }
  if (!problem.w.has_value()) {
    return absl::InvalidArgumentError(
        "problem has no adjustable cost vector w; use "
        "ReformulateSeparableQdrSocp");
  }
  return BuildSeparable(problem, theta);
}

absl::StatusOr<ConicProgram> ReformulateSocp(const AroProblem& problem,
                                             double theta) {
  return problem.w.has_value() ? ReformulateObjectiveSocp(problem, theta)
                               : ReformulateSeparableQdrSocp(problem, theta);
}

absl::StatusOr<ConicProgram> ReformulateAdrSocp(const AroProblem& problem) {
  if (absl::Status status = internal::CheckBuilderInput(problem, 1.0);
      !status.ok()) {
    return status;
  }
  const bool has_tau = problem.w.has_value();
  const AdrLayout layout =
      MakeAdrLayout(problem.n, problem.k, problem.l(), has_tau,
                    problem.cost_uncertainty.has_value());
  ConicProgram program;
  program.name = "adr_socp";
  program.num_vars = layout.total;
  program.layout = layout;
  internal::SetObjective(problem, layout, program);
  const double radius = problem.uncertainty.radius;
  for (int i = 0; i < problem.m(); ++i) {
    ConeConstraint row = AdrRow(problem.rows[i], radius, layout, false);
    row.label = absl::StrCat("row ", i);
    program.AddRow(std::move(row));
  }
  if (has_tau) {
    ConeConstraint row =
        AdrRow(internal::ObjectiveRow(problem), radius, layout, true);
    row.label = "objective";
    program.AddRow(std::move(row));
  }
  return program;
}

}  // namespace aroqdr
