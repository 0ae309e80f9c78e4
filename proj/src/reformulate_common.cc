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

#include "reformulate_common.h"

#include "absl/strings/str_cat.h"

namespace aroqdr::internal {

absl::Status CheckBuilderInput(const AroProblem& problem, double theta) {
  const std::vector<Diagnostic> diagnostics = Validate(problem);
  if (!diagnostics.empty()) {
    return absl::InvalidArgumentError(FormatDiagnostics(diagnostics));
  }
  if (!(theta >= 0.0 && theta <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("theta must lie in [0, 1], got ", theta));
  }
  return absl::OkStatus();
}

ConstraintRow ObjectiveRow(const AroProblem& problem) {
  ConstraintRow row;
  row.a = Eigen::VectorXd::Zero(problem.n);
  row.A = Eigen::MatrixXd::Zero(problem.n, problem.l());
  row.b = problem.w.value_or(Eigen::VectorXd::Zero(problem.k));
  row.d0 = 0.0;
  row.d = Eigen::VectorXd::Zero(problem.l());
  return row;
}

void SetObjective(const AroProblem& problem, const LayoutBase& layout,
                  ConicProgram& program) {
  AffineExpr objective;
  if (problem.cost_uncertainty.has_value() && layout.has_cost_tau()) {
    const CostUncertainty& cost = *problem.cost_uncertainty;
    objective.Add(layout.cost_tau_offset, 1.0);
    ConeConstraint row;
    row.kind = ConeKind::kSecondOrder;
    row.label = "cost";
    AffineExpr head;
    head.Add(layout.cost_tau_offset, 1.0);
    for (int i = 0; i < layout.n; ++i) head.Add(layout.x(i), -cost.c0(i));
    row.entries.push_back(head);
    for (int i = 0; i < layout.n; ++i) {
      AffineExpr entry;
      entry.Add(layout.x(i), cost.rho);
      row.entries.push_back(entry);
    }
    program.AddRow(std::move(row));
  } else {
    for (int i = 0; i < layout.n; ++i) objective.Add(layout.x(i), problem.c(i));
  }
  if (layout.has_tau()) objective.Add(layout.tau_offset, 1.0);
  program.objective = objective;
}

AffineExpr NominalLhs(const ConstraintRow& row, const LayoutBase& layout,
                      double theta) {
  AffineExpr expr;
  for (int i = 0; i < layout.n; ++i) expr.Add(layout.x(i), row.a(i));
  for (int j = 0; j < layout.k; ++j) expr.Add(layout.y0(j), theta * row.b(j));
  return expr;
}

AffineExpr LinearCoefficient(const ConstraintRow& row, const LayoutBase& layout,
                             double theta, int p) {
  AffineExpr expr(row.d(p));
  for (int i = 0; i < layout.n; ++i) expr.Add(layout.x(i), -row.A(i, p));
  for (int j = 0; j < layout.k; ++j) {
    expr.Add(layout.W(j, p), -theta * row.b(j));
  }
  return expr;
}

}  // namespace aroqdr::internal
