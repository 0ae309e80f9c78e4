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

#ifndef AROQDR_REFORMULATE_COMMON_H_
#define AROQDR_REFORMULATE_COMMON_H_

#include "Eigen/Core"
#include "absl/status/status.h"
#include "aroqdr/conic_program.h"
#include "aroqdr/layout.h"
#include "aroqdr/model.h"

namespace aroqdr::internal {

// Rejects invalid problems and theta outside [0, 1].
absl::Status CheckBuilderInput(const AroProblem& problem, double theta);

// The adjustable cost row max_z w'y(z) <= tau written as a robust row with
// a = 0, A = 0, b = w, d0 = 0, d = 0; builders add tau to its right side.
ConstraintRow ObjectiveRow(const AroProblem& problem);

// c'x, or cost_tau with the row |rho x| <= cost_tau - c0'x under cost
// uncertainty; plus tau when the layout has one.
void SetObjective(const AroProblem& problem, const LayoutBase& layout,
                  ConicProgram& program);

// Affine expressions shared by the builders.
// a'x + theta b'y0
AffineExpr NominalLhs(const ConstraintRow& row, const LayoutBase& layout,
                      double theta);
// (d - A'x - theta W'b)_p
AffineExpr LinearCoefficient(const ConstraintRow& row, const LayoutBase& layout,
                             double theta, int p);

}  // namespace aroqdr::internal

#endif  // AROQDR_REFORMULATE_COMMON_H_
