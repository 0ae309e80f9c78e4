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

// Backend-neutral solve entry point for ConicProgram.
//
// Two backends ship with the library:
//
//   "ipm"      Homogeneous self-dual primal-dual interior-point method with
//              Nesterov-Todd scaling and Mehrotra correction. Handles zero,
//              nonnegative, second-order and PSD rows.
//   "barrier"  Primal log-barrier path following with a phase-I start.
//              Handles zero, nonnegative and second-order rows only.
//
// Example:
//
//   ConicProgram program = ...;
//   absl::StatusOr<Solution> solution = Solve(program, SolverSettings{});
//   if (solution.ok() && solution->status == SolveStatus::kOptimal) { ... }

#ifndef AROQDR_SOLVER_H_
#define AROQDR_SOLVER_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "Eigen/Core"
#include "absl/status/statusor.h"
#include "aroqdr/conic_program.h"

namespace aroqdr {

enum class SolveStatus {
  kOptimal,
  kInfeasible,
  kUnbounded,
  kNumericalError,
  kIterationLimit,
};

std::string_view SolveStatusName(SolveStatus status);

struct SolverSettings {
  double abs_tol = 1e-8;
  double rel_tol = 1e-8;
  int max_iter = 200;
  bool verbose = false;
};

struct Solution {
  SolveStatus status = SolveStatus::kNumericalError;
  // Length num_vars whenever status is kOptimal. For other statuses the last
  // iterate may be reported for diagnostics.
  Eigen::VectorXd values;
  double objective_value = 0.0;
  std::string solver_name;
  int iterations = 0;
  // Final scaled residuals, for diagnostics.
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double gap = 0.0;
};

class ConicSolver {
 public:
  virtual ~ConicSolver() = default;
  virtual std::string_view name() const = 0;
  // Whether every row kind in `program` can be handled.
  virtual bool Supports(const ConicProgram& program) const = 0;
  virtual absl::StatusOr<Solution> Solve(
      const ConicProgram& program, const SolverSettings& settings) const = 0;
};

// Names accepted by MakeSolver.
std::vector<std::string> AvailableBackends();

// Unimplemented for unknown names.
absl::StatusOr<std::unique_ptr<ConicSolver>> MakeSolver(std::string_view name);

// Validates `program` and dispatches to `backend`. InvalidArgument for
// ill-posed programs, Unimplemented when the backend is unknown or cannot
// represent one of the rows.
absl::StatusOr<Solution> Solve(const ConicProgram& program,
                               const SolverSettings& settings,
                               std::string_view backend = "ipm");

}  // namespace aroqdr

#endif  // AROQDR_SOLVER_H_
