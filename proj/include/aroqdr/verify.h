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

// Certifies a first-stage decision and decision rule without trusting the
// conic solver. Under the rule, robust row i reads
//
//   z'M_i z + g_i'z + c_i <= 0   for all |z| <= r,
//   M_i = (1 - theta) sum_j (b_i)_j Q_j,
//   g_i = A_i'x + theta W'b_i - d_i,
//   c_i = a_i'x + theta b_i'y0 - d0_i,
//
// and its exact worst case is a trust-region problem.

#ifndef AROQDR_VERIFY_H_
#define AROQDR_VERIFY_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "Eigen/Core"
#include "absl/status/statusor.h"
#include "aroqdr/model.h"
#include "json.hpp"

namespace aroqdr {

inline constexpr double kVerifyTolerance = 1e-6;

struct RowQuadratic {
  Eigen::MatrixXd M;
  Eigen::VectorXd g;
  double c = 0.0;
};

// The quadratic of robust row `row` under (x, rule).
RowQuadratic RobustRowQuadratic(const ConstraintRow& row,
                                const Eigen::VectorXd& x,
                                const QdrCoefficients& rule);

struct RowVerification {
  std::string name;  // "row 3" or "objective"
  double worst_value = 0.0;
  Eigen::VectorXd maximizer;
  std::string method = "exact";
};

struct VerificationReport {
  std::vector<RowVerification> rows;
  double max_violation = 0.0;
  double tolerance = kVerifyTolerance;
  bool feasible = true;
};

// Exact worst case of every robust row. When the problem has w and `tau` is
// given, the adjustable cost row max_z w'y(z) - tau is checked as well.
absl::StatusOr<VerificationReport> VerifyRobustFeasibility(
    const AroProblem& problem, const Eigen::VectorXd& x,
    const QdrCoefficients& rule, double tol = kVerifyTolerance,
    std::optional<double> tau = std::nullopt);

nlohmann::json ReportToJson(const VerificationReport& report);

// The pair (A, B) in the quadratic implication u'Au >= 0 => u'Bu >= 0 for
// u = (1, z): A = diag(r^2, -I) describes the ball and B is the negated
// row quadratic in homogeneous form. B - lambda A is the LMI block.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> SLemmaMatrices(
    const RowQuadratic& quadratic, double radius);

// Whether B - lambda A is PSD up to -tol (1 + |B - lambda A|_F).
absl::StatusOr<bool> SLemmaCertificate(const Eigen::MatrixXd& a,
                                       const Eigen::MatrixXd& b, double lambda,
                                       double tol);

// Uniform point in the ball of radius `radius` in R^dim: Gaussian direction,
// radius scaled by U^(1/dim).
Eigen::VectorXd SampleBall(int dim, double radius, std::mt19937_64& rng);

// Max over uniform ball samples of the largest entry of
// ConstraintResiduals. Evaluates the rule directly, so it shares no code
// with the exact path.
absl::StatusOr<double> SampleFeasibility(const AroProblem& problem,
                                         const Eigen::VectorXd& x,
                                         const QdrCoefficients& rule,
                                         int num_samples, uint64_t seed);

}  // namespace aroqdr

#endif  // AROQDR_VERIFY_H_
