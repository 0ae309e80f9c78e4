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

// Second-order cone reformulations.
//
// For a separable rule (every Q_j diagonal, Q_j = diag(q_{1,j}, ..., q_{l,j}))
// robust row i splits over the coordinates of z. With
// sigma_p = sum_j (b_i)_j q_{p,j} and u_p = (d - A'x - theta W'b)_p, row i
// holds on the ball iff there are lambda >= 0 and s >= 0 with
//
//   sum_p s_p <= d0 - a'x - theta b'y0 - lambda r^2,
//   lambda - (1 - theta) sigma_p >= 0,
//   u_p^2 <= 4 s_p (lambda - (1 - theta) sigma_p),
//
// and each product bound is one 3-dimensional cone row.
//
// The affine rule (theta = 1, Q = 0) has the classical counterpart
// a'x + b'y0 + r |A'x + W'b - d| <= d0, one (l+1)-dimensional cone per row.

#ifndef AROQDR_REFORMULATE_SOCP_H_
#define AROQDR_REFORMULATE_SOCP_H_

#include <vector>

#include "Eigen/Core"
#include "absl/status/statusor.h"
#include "aroqdr/conic_program.h"
#include "aroqdr/layout.h"
#include "aroqdr/model.h"

namespace aroqdr {

// sigma_p = sum_j b_j q(p, j) for q of shape l x k.
absl::StatusOr<Eigen::VectorXd> SigmaCoefficients(const Eigen::VectorXd& b,
                                                  const Eigen::MatrixXd& q);

// |(t, alpha - beta)| <= alpha + beta, i.e. t^2 <= 4 alpha beta with
// alpha, beta >= 0.
ConeConstraint ProductToSoc(const AffineExpr& t, const AffineExpr& alpha,
                            const AffineExpr& beta);

// Rows for robust row `row` in group `group`, in the order: lambda >= 0,
// s_p >= 0 (l rows), budget, l shift rows, l cone rows.
std::vector<ConeConstraint> SocRowsForConstraint(const ConstraintRow& row,
                                                 double theta, double radius,
                                                 const SocpLayout& layout,
                                                 int group);

// Same for the adjustable cost row; uses the last group and tau.
std::vector<ConeConstraint> ObjectiveSocRows(const Eigen::VectorXd& w,
                                             double theta, double radius,
                                             const SocpLayout& layout);

absl::StatusOr<ConicProgram> ReformulateSeparableQdrSocp(
    const AroProblem& problem, double theta);
absl::StatusOr<ConicProgram> ReformulateObjectiveSocp(const AroProblem& problem,
                                                      double theta);
// Dispatches on whether the problem has w.
absl::StatusOr<ConicProgram> ReformulateSocp(const AroProblem& problem,
                                             double theta);

// Affine decision rule counterpart; handles w when present.
absl::StatusOr<ConicProgram> ReformulateAdrSocp(const AroProblem& problem);

}  // namespace aroqdr

#endif  // AROQDR_REFORMULATE_SOCP_H_
