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

#ifndef AROQDR_TRUST_REGION_H_
#define AROQDR_TRUST_REGION_H_

#include "Eigen/Core"

namespace aroqdr {

struct TrustRegionResult {
  double value = 0.0;
  Eigen::VectorXd argmax;
  // Multiplier mu of the ball constraint in (mu I - Qm) z = g / 2.
  double multiplier = 0.0;
  // The maximizer needed a component along the top eigenvector of Qm that
  // the secular equation cannot produce.
  bool hard_case = false;
};

// Global maximum of z'Qm z + g'z + c0 over |z| <= radius. Qm is read through
// its symmetric part. Solved exactly from an eigendecomposition of Qm and a
// safeguarded Newton iteration on the secular equation.
TrustRegionResult WorstCaseQuadratic(const Eigen::MatrixXd& Qm,
                                     const Eigen::VectorXd& g, double c0,
                                     double radius);

}  // namespace aroqdr

#endif  // AROQDR_TRUST_REGION_H_
