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

// Exact semidefinite reformulation of robust rows under a quadratic decision
// rule. Row i holds for every z in the ball of radius r iff some lambda_i >= 0
// makes the (1+l) x (1+l) matrix
//
//   [ d0 - a'x - theta b'y0 - lambda r^2      (1/2)(d - A'x - theta W'b)'    ]
//   [ (1/2)(d - A'x - theta W'b)     lambda I - (1-theta) sum_j b_j Q_j      ]
//
// positive semidefinite. The adjustable cost row uses w for b, zero a, A, d
// and d0, and the epigraph variable tau in the corner entry.

#ifndef AROQDR_REFORMULATE_SDP_H_
#define AROQDR_REFORMULATE_SDP_H_

#include "Eigen/Core"
#include "absl/status/statusor.h"
#include "aroqdr/conic_program.h"
#include "aroqdr/layout.h"
#include "aroqdr/model.h"

namespace aroqdr {

struct SdpOptions {
  // Restricts every Q_j to be diagonal (the separable rule class).
  bool diagonal_q = false;
};

// The PSD row of robust row `row` in multiplier group `group`.
ConeConstraint LmiBlock(const ConstraintRow& row, double theta, double radius,
                        const SdpLayout& layout, int group);

// The PSD row of the adjustable cost max_z w'y(z) <= tau; uses the last
// multiplier group. Requires a layout with tau.
ConeConstraint ObjectiveLmiBlock(const Eigen::VectorXd& w, double theta,
                                 double radius, const SdpLayout& layout);

// Constraint-only problems (no w). The program carries its SdpLayout.
absl::StatusOr<ConicProgram> ReformulateQdrSdp(const AroProblem& problem,
                                               double theta,
                                               const SdpOptions& options = {});

// Problems with an adjustable cost vector w: minimizes c'x + tau with one
// extra PSD block for the cost row.
absl::StatusOr<ConicProgram> ReformulateObjectiveSdp(
    const AroProblem& problem, double theta, const SdpOptions& options = {});

// Dispatches on whether the problem has w.
absl::StatusOr<ConicProgram> ReformulateSdp(const AroProblem& problem,
                                            double theta,
                                            const SdpOptions& options = {});

}  // namespace aroqdr

#endif  // AROQDR_REFORMULATE_SDP_H_
