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

// Domain types for two-stage adjustable robust linear programs
//
//   min_{x, y(.)}  c'x  [+ max_{z in Z} w'y(z)]
//   s.t.  (a_i + A_i z)'x + b_i'y(z) <= d0_i + d_i'z   for all z in Z, i = 1..m
//
// with ball uncertainty Z = {z in R^l : |z|^2 <= r^2} and the parameterized
// quadratic decision rule
//
//   y(z) = theta (y0 + W z) + (1 - theta) (z'Q_1 z, ..., z'Q_k z)'.

#ifndef AROQDR_MODEL_H_
#define AROQDR_MODEL_H_

#include <optional>
#include <string>
#include <vector>

#include "Eigen/Core"
#include "absl/status/statusor.h"

namespace aroqdr {

// Symmetry tolerance for stored Q_j.
inline constexpr double kSymmetryTolerance = 1e-12;
// Asymmetry above this triggers a warning when a rule is symmetrized.
inline constexpr double kSymmetrizeWarnThreshold = 1e-9;

// Z = {z in R^dim : |z|^2 <= radius^2}. Always centered at the origin.
struct BallUncertainty {
  double radius = 1.0;
  int dim = 1;
};

// One robust row (a + A z)'x + b'y(z) <= d0 + d'z.
struct ConstraintRow {
  Eigen::VectorXd a;  // n
  Eigen::MatrixXd A;  // n x l
  Eigen::VectorXd b;  // k
  double d0 = 0.0;
  Eigen::VectorXd d;  // l

  bool operator==(const ConstraintRow& other) const;
};

// Euclidean-ball cost uncertainty {c : |c - c0| <= rho}.
struct CostUncertainty {
  Eigen::VectorXd c0;
  double rho = 0.0;

  bool operator==(const CostUncertainty& other) const;
};

struct AroProblem {
  int n = 0;  // first-stage variables
  int k = 0;  // adjustable variables
  Eigen::VectorXd c;
  std::vector<ConstraintRow> rows;
  BallUncertainty uncertainty;
  // Adjustable cost: adds max_{z in Z} w'y(z) to the objective.
  std::optional<Eigen::VectorXd> w;
  std::optional<CostUncertainty> cost_uncertainty;

  int l() const { return uncertainty.dim; }
  int m() const { return static_cast<int>(rows.size()); }

  bool operator==(const AroProblem& other) const;
};

// Coefficients of a (possibly separable) quadratic decision rule.
// Q holds full symmetric l x l matrices in both cases; when `separable` is set
// the off-diagonal entries are exactly zero.
struct QdrCoefficients {
  double theta = 1.0;
  Eigen::VectorXd y0;              // k
  Eigen::MatrixXd W;               // k x l
  std::vector<Eigen::MatrixXd> Q;  // k matrices, l x l
  bool separable = false;

  int k() const { return static_cast<int>(y0.size()); }
  int l() const { return static_cast<int>(W.cols()); }

  bool operator==(const QdrCoefficients& other) const;
};

// Builds a rule, replacing every Q_j by (Q_j + Q_j')/2. Prints a warning to
// stderr when some Q_j is asymmetric by more than kSymmetrizeWarnThreshold.
// For separable rules the off-diagonal entries are zeroed.
absl::StatusOr<QdrCoefficients> MakeQdrCoefficients(
    double theta, Eigen::VectorXd y0, Eigen::MatrixXd W,
    std::vector<Eigen::MatrixXd> Q, bool separable = false);

// The all-zero rule for the given dimensions.
QdrCoefficients ZeroRule(double theta, int k, int l, bool separable = false);

// y(z) = theta (y0 + W z) + (1 - theta) (z'Q_j z)_j.
absl::StatusOr<Eigen::VectorXd> EvaluateRule(const QdrCoefficients& rule,
                                             const Eigen::VectorXd& z);

// Component i is (a_i + A_i z)'x + b_i'y(z) - d0_i - d_i'z, so row i holds at
// z iff the entry is nonpositive. z does not have to lie in the ball.
absl::StatusOr<Eigen::VectorXd> ConstraintResiduals(const AroProblem& problem,
                                                    const Eigen::VectorXd& x,
                                                    const QdrCoefficients& rule,
                                                    const Eigen::VectorXd& z);

struct Diagnostic {
  std::string field;  // e.g. "rows[3].A" or "uncertainty.radius"
  std::string message;
};

// One diagnostic per violated invariant; empty iff the problem is well formed.
std::vector<Diagnostic> Validate(const AroProblem& problem);

// Checks a rule against the problem dimensions: theta in [0, 1], shapes,
// symmetry of every Q_j to kSymmetryTolerance, and diagonality if separable.
std::vector<Diagnostic> ValidateRule(const QdrCoefficients& rule, int k, int l);

std::string FormatDiagnostics(const std::vector<Diagnostic>& diagnostics);

}  // namespace aroqdr

#endif  // AROQDR_MODEL_H_
