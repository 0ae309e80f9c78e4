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

#ifndef AROQDR_SOLVERS_BARRIER_H_
#define AROQDR_SOLVERS_BARRIER_H_

#include "aroqdr/solver.h"

namespace aroqdr {

// Primal log-barrier path following for programs with zero, nonnegative and
// second-order rows. A phase-I barrier problem finds a strictly feasible
// start. Every variable is boxed by |v| <= kBarrierBound so that barrier
// subproblems stay bounded; an optimum on that box is reported as unbounded.
class BarrierSolver : public ConicSolver {
 public:
  static constexpr double kBarrierBound = 1e6;

  std::string_view name() const override { return "barrier"; }
  bool Supports(const ConicProgram& program) const override;
  absl::StatusOr<Solution> Solve(const ConicProgram& program,
                                 const SolverSettings& settings) const override;
};

}  // namespace aroqdr

#endif  // AROQDR_SOLVERS_BARRIER_H_
