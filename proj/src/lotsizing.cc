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

#include "aroqdr/lotsizing.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "aroqdr/verify.h"

namespace aroqdr {

absl::StatusOr<LotSizingInstance> GenerateInstance(int N, double gamma,
                                                   uint64_t seed) {
  if (N < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("lot-sizing needs N >= 2 stores, got ", N));
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    return absl::InvalidArgumentError("capacity gamma must be positive");
  }
  LotSizingInstance instance;
  instance.N = N;
  instance.gamma = gamma;
  instance.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> cost(0.0, kMaxUnitCost);
  instance.c.resize(N);
  for (int i = 0; i < N; ++i) instance.c(i) = cost(rng);
  instance.t = Eigen::MatrixXd::Zero(N, N);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      if (i != j) instance.t(i, j) = cost(rng);
    }
  }
  return instance;
}

double DemandRadius(const LotSizingInstance& instance) {
  return instance.gamma / std::sqrt(2.0);
}

AroProblem BuildAro(const LotSizingInstance& instance) {
  const int N = instance.N;
  const int k = N * N;
  AroProblem problem;
  problem.n = N;
  problem.k = k;
  problem.c = instance.c;
  problem.uncertainty = {DemandRadius(instance), N};

  auto blank = [&]() {
    ConstraintRow row;
    row.a = Eigen::VectorXd::Zero(N);
    row.A = Eigen::MatrixXd::Zero(N, N);
    row.b = Eigen::VectorXd::Zero(k);
    row.d0 = 0.0;
    row.d = Eigen::VectorXd::Zero(N);
    return row;
  };
  for (int i = 0; i < N; ++i) {
    ConstraintRow row = blank();
    row.a(i) = -1.0;
    for (int j = 0; j < N; ++j) {
      row.b(ShipmentIndex(N, j, i)) -= 1.0;
      row.b(ShipmentIndex(N, i, j)) += 1.0;
    }
    row.d(i) = -1.0;
    problem.rows.push_back(row);
  }
  for (int s = 0; s < k; ++s) {
    ConstraintRow row = blank();
    row.b(s) = -1.0;
    problem.rows.push_back(row);
  }
  for (int i = 0; i < N; ++i) {
    ConstraintRow upper = blank();
    upper.a(i) = 1.0;
    upper.d0 = instance.gamma;
    problem.rows.push_back(upper);
    ConstraintRow lower = blank();
    lower.a(i) = -1.0;
    problem.rows.push_back(lower);
  }
  Eigen::VectorXd w(k);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) w(ShipmentIndex(N, i, j)) = instance.t(i, j);
  }
  problem.w = w;
  return problem;
}

absl::StatusOr<double> SolveTd(const LotSizingInstance& instance,
                               const Eigen::VectorXd& demand,
                               const SolverSettings& settings,
                               const std::string& backend) {
  const int N = instance.N;
  if (demand.size() != N) {
    return absl::InvalidArgumentError(
        absl::StrCat("demand has ", demand.size(), " entries, expected ", N));
  }
  ConicProgram program;
  program.name = "lotsizing_td";
  const int x = program.AddVariables(N);
  const int y = program.AddVariables(N * N);
  for (int i = 0; i < N; ++i) {
    program.objective.Add(x + i, instance.c(i));
    for (int j = 0; j < N; ++j) {
      program.objective.Add(y + ShipmentIndex(N, i, j), instance.t(i, j));
    }
  }
  ConeConstraint rows;
  rows.kind = ConeKind::kNonnegative;
  for (int i = 0; i < N; ++i) {
    AffineExpr balance(-demand(i));
    balance.Add(x + i, 1.0);
    for (int j = 0; j < N; ++j) {
      balance.Add(y + ShipmentIndex(N, j, i), 1.0);
      balance.Add(y + ShipmentIndex(N, i, j), -1.0);
    }
    rows.entries.push_back(balance);
    rows.entries.push_back(AffineExpr().Add(x + i, 1.0));
    rows.entries.push_back(AffineExpr(instance.gamma).Add(x + i, -1.0));
  }
  for (int s = 0; s < N * N; ++s) {
    rows.entries.push_back(AffineExpr().Add(y + s, 1.0));
  }
  program.AddRow(std::move(rows));
  absl::StatusOr<Solution> solution = Solve(program, settings, backend);
  if (!solution.ok()) return solution.status();
  if (solution->status == SolveStatus::kInfeasible) {
    return absl::FailedPreconditionError(
        "demand exceeds the total capacity of the stores");
  }
  if (solution->status != SolveStatus::kOptimal) {
    return absl::InternalError(
        absl::StrCat("demand LP ended with status ",
                     std::string(SolveStatusName(solution->status))));
  }
  return solution->objective_value;
}

absl::StatusOr<double> SolveWc(const LotSizingInstance& instance,
                               const SolverSettings& settings,
                               const std::string& backend) {
  return SolveTd(instance,
                 Eigen::VectorXd::Constant(instance.N, DemandRadius(instance)),
                 settings, backend);
}

absl::StatusOr<double> RealizedValue(const LotSizingInstance& instance,
                                     const Eigen::VectorXd& x,
                                     const QdrCoefficients& rule,
                                     const Eigen::VectorXd& demand) {
  absl::StatusOr<Eigen::VectorXd> y = EvaluateRule(rule, demand);
  if (!y.ok()) return y.status();
  const int N = instance.N;
  if (x.size() != N || y->size() != N * N) {
    return absl::InvalidArgumentError("policy does not match the instance");
  }
  double value = instance.c.dot(x);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const double shipment = (*y)(ShipmentIndex(N, i, j));
      if (shipment < -1e-8) {
        return absl::FailedPreconditionError(
            absl::StrCat("policy ships ", shipment, " units from store ", i,
                         " to ", j, "; it is not robust feasible"));
      }
      value += instance.t(i, j) * shipment;
    }
  }
  return value;
}

absl::StatusOr<std::pair<double, double>> Metrics(double v, double t,
                                                  double w) {
  if (v == 0.0 || w == 0.0) {
    return absl::InvalidArgumentError(
        absl::StrCat("metrics divide by v = ", v, " and w = ", w));
  }
  return std::make_pair(100.0 * (v - t) / v, 100.0 * (w - v) / w);
}

Eigen::VectorXd SampleDemand(const LotSizingInstance& instance,
                             std::mt19937_64& rng) {
  const double radius = DemandRadius(instance);
  while (true) {
    Eigen::VectorXd d = SampleBall(instance.N, radius, rng);
    if (d.minCoeff() >= 0.0) return d;
  }
}

}  // namespace aroqdr
