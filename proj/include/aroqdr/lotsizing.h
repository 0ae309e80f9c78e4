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

// Network lot-sizing with uncertain demand. N stores receive x_i units up
// front (storage cost c_i, capacity gamma) and ship y_ij(z) units from store
// i to store j once the demand z is known (cost t_ij, t_ii = 0):
//
//   min  c'x + max_z sum_ij t_ij y_ij(z)
//   s.t. x_i + sum_j y_ji(z) - sum_j y_ij(z) >= z_i,  y_ij(z) >= 0,
//        0 <= x_i <= gamma,  for all |z|^2 <= gamma^2 / 2.

#ifndef AROQDR_LOTSIZING_H_
#define AROQDR_LOTSIZING_H_

#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include "Eigen/Core"
#include "absl/status/statusor.h"
#include "aroqdr/model.h"
#include "aroqdr/solver.h"

namespace aroqdr {

inline constexpr double kDefaultGamma = 10.0;
inline constexpr double kMaxUnitCost = 1000.0;

struct LotSizingInstance {
  int N = 0;
  double gamma = kDefaultGamma;
  Eigen::VectorXd c;  // storage cost per store
  Eigen::MatrixXd t;  // t(i, j): cost of shipping one unit from i to j
  uint64_t seed = 0;
};

// Costs drawn from U[0, 1000] with a 64-bit Mersenne twister seeded by
// `seed`; t has a zero diagonal.
absl::StatusOr<LotSizingInstance> GenerateInstance(int N, double gamma,
                                                   uint64_t seed);

// Index of y_ij among the k = N^2 adjustable variables.
inline int ShipmentIndex(int N, int i, int j) { return i * N + j; }

// Rows, in order: N demand rows, N^2 rows y_ij(z) >= 0, then x_i <= gamma
// and -x_i <= 0 for every store. Demand row i reads
// -x_i - sum_j y_ji(z) + sum_j y_ij(z) <= -z_i, so d = -e_i. The cost vector
// is w = vec(t) and the ball radius is gamma / sqrt(2).
AroProblem BuildAro(const LotSizingInstance& instance);

// Demand radius gamma / sqrt(2).
double DemandRadius(const LotSizingInstance& instance);

// Optimal cost of serving a known demand d (a linear program solved with
// the conic backend). Infeasible demand yields a FailedPrecondition error.
absl::StatusOr<double> SolveTd(const LotSizingInstance& instance,
                               const Eigen::VectorXd& demand,
                               const SolverSettings& settings = {},
                               const std::string& backend = "ipm");
// SolveTd at d_i = gamma / sqrt(2) for every store.
absl::StatusOr<double> SolveWc(const LotSizingInstance& instance,
                               const SolverSettings& settings = {},
                               const std::string& backend = "ipm");

// Realized cost c'x + sum t_ij y_ij(d). Fails if some shipment is below
// -1e-8, which a certified policy cannot produce.
absl::StatusOr<double> RealizedValue(const LotSizingInstance& instance,
                                     const Eigen::VectorXd& x,
                                     const QdrCoefficients& rule,
                                     const Eigen::VectorXd& demand);

// (m1, m2) = (100 (v - t) / v, 100 (w - v) / w).
absl::StatusOr<std::pair<double, double>> Metrics(double v, double t, double w);

// Uniform demand in the ball, redrawn until every entry is nonnegative.
Eigen::VectorXd SampleDemand(const LotSizingInstance& instance,
                             std::mt19937_64& rng);

}  // namespace aroqdr

#endif  // AROQDR_LOTSIZING_H_
