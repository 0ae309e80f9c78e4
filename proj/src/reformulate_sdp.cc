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

#include "aroqdr/reformulate_sdp.h"

#include "absl/strings/str_cat.h"
#include "reformulate_common.h"

namespace aroqdr {
namespace {

using internal::LinearCoefficient;
using internal::NominalLhs;

ConeConstraint BuildLmi(const ConstraintRow& row, double theta, double radius,
                        const SdpLayout& layout, int group, bool with_tau) {
  const int l = layout.l;
  const int side = l + 1;
  ConeConstraint block;
  block.kind = ConeKind::kPsd;
  block.side = side;
  block.entries.resize(PackedTriangleSize(side));
  const int lambda = layout.lambda(group);

  AffineExpr corner(row.d0);
  corner.AddScaled(NominalLhs(row, layout, theta), -1.0);
  corner.Add(lambda, -radius * radius);
  if (with_tau) corner.Add(layout.tau_offset, 1.0);
  block.entries[PackedIndex(0, 0, side)] = corner;

  for (int p = 0; p < l; ++p) {
    AffineExpr border;
    border.AddScaled(LinearCoefficient(row, layout, theta, p), 0.5);
    block.entries[PackedIndex(0, p + 1, side)] = border;
  }
  for (int p = 0; p < l; ++p) {
    for (int q = p; q < l; ++q) {
      AffineExpr entry;
      if (p == q) entry.Add(lambda, 1.0);
      for (int j = 0; j < layout.k; ++j) {
        const int var = layout.Q(j, p, q);
        if (var >= 0) entry.Add(var, -(1.0 - theta) * row.b(j));
      }
      block.entries[PackedIndex(p + 1, q + 1, side)] = entry;
    }
  }
  return block;
}

absl::StatusOr<ConicProgram> Build(const AroProblem& problem, double theta,
                                   const SdpOptions& options) {
  const bool has_tau = problem.w.has_value();
  const int groups = problem.m() + (has_tau ? 1 : 0);
  const SdpLayout layout =
      MakeSdpLayout(problem.n, problem.k, problem.l(), groups, theta, has_tau,
                    problem.cost_uncertainty.has_value(), options.diagonal_q);

  ConicProgram program;
  program.name = options.diagonal_q ? "qdr_sdp_diagonal" : "qdr_sdp";
  program.num_vars = layout.total;
  program.layout = layout;
  internal::SetObjective(problem, layout, program);

  ConeConstraint multipliers;
  multipliers.kind = ConeKind::kNonnegative;
  multipliers.label = "lambda";
  for (int g = 0; g < groups; ++g) {
    AffineExpr entry;
    entry.Add(layout.lambda(g), 1.0);
    multipliers.entries.push_back(entry);
  }
  program.AddRow(std::move(multipliers));

  const double radius = problem.uncertainty.radius;
  for (int i = 0; i < problem.m(); ++i) {
    ConeConstraint block = LmiBlock(problem.rows[i], theta, radius, layout, i);
    block.label = absl::StrCat("row ", i);
    program.AddRow(std::move(block));
  }
  if (has_tau) {
    ConeConstraint block = ObjectiveLmiBlock(*problem.w, theta, radius, layout);
    block.label = "objective";
    program.AddRow(std::move(block));
  }
  return program;
}

}  // namespace

ConeConstraint LmiBlock(const ConstraintRow& row, double theta, double radius,
                        const SdpLayout& layout, int group) {
  return BuildLmi(row, theta, radius, layout, group, /*with_tau=*/false);
}

ConeConstraint ObjectiveLmiBlock(const Eigen::VectorXd& w, double theta,
                                 double radius, const SdpLayout& layout) {
  ConstraintRow row;
  row.a = Eigen::VectorXd::Zero(layout.n);
  row.A = Eigen::MatrixXd::Zero(layout.n, layout.l);
  row.b = w;
  row.d = Eigen::VectorXd::Zero(layout.l);
  return BuildLmi(row, theta, radius, layout, layout.num_groups - 1,
                  /*with_tau=*/true);
}

absl::StatusOr<ConicProgram> ReformulateQdrSdp(const AroProblem& problem,
                                               double theta,
                                               const SdpOptions& options) {
  if (absl::Status status = internal::CheckBuilderInput(problem, theta);
      !status.ok()) {
    return status;
  }
  if (problem.w.has_value()) {
    return absl::InvalidArgumentError(
        "problem has an adjustable cost vector w; use ReformulateObjectiveSdp");
  }
  return Build(problem, theta, options);
}

absl::StatusOr<ConicProgram> ReformulateObjectiveSdp(
    const AroProblem& problem, double theta, const SdpOptions& options) {
  if (absl::Status status = internal::CheckBuilderInput(problem, theta);
      !status.ok()) {
    return status;
  }
  if (!problem.w.has_value()) {
    return absl::InvalidArgumentError(
        "problem has no adjustable cost vector w; use ReformulateQdrSdp");
  }
  return Build(problem, theta, options);
}

absl::StatusOr<ConicProgram> ReformulateSdp(const AroProblem& problem,
                                            double theta,
                                            const SdpOptions& options) {
  return problem.w.has_value()
             ? ReformulateObjectiveSdp(problem, theta, options)
             : ReformulateQdrSdp(problem, theta, options);
}

}  // namespace aroqdr
