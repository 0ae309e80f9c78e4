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

#ifndef AROQDR_SOLVERS_INTERIOR_POINT_H_
#define AROQDR_SOLVERS_INTERIOR_POINT_H_

#include "aroqdr/solver.h"

namespace aroqdr {

// Homogeneous self-dual embedding solved by a Mehrotra predictor-corrector
// method with Nesterov-Todd scaling. Infeasibility and unboundedness are
// reported from the embedding's certificates.
class InteriorPointSolver : public ConicSolver {
 public:
  std::string_view name() const override { return "ipm"; }
  bool Supports(const ConicProgram&) const override { return true; }
  absl::StatusOr<Solution> Solve(const ConicProgram& program,
                                 const SolverSettings& settings) const override;
};

}  // namespace aroqdr

#endif  // AROQDR_SOLVERS_INTERIOR_POINT_H_
