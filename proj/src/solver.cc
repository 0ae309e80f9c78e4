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

#include "aroqdr/solver.h"

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "solvers/barrier.h"
#include "solvers/interior_point.h"

namespace aroqdr {

std::string_view SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kUnbounded:
      return "unbounded";
    case SolveStatus::kNumericalError:
      return "numerical_error";
    case SolveStatus::kIterationLimit:
      return "iteration_limit";
  }
  return "unknown";
}

std::vector<std::string> AvailableBackends() { return {"ipm", "barrier"}; }

absl::StatusOr<std::unique_ptr<ConicSolver>> MakeSolver(std::string_view name) {
  if (name == "ipm") return std::make_unique<InteriorPointSolver>();
  if (name == "barrier") return std::make_unique<BarrierSolver>();
  return absl::UnimplementedError(
      absl::StrCat("unknown solver backend '", std::string(name),
                   "'; available: ", absl::StrJoin(AvailableBackends(), ", ")));
}

absl::StatusOr<Solution> Solve(const ConicProgram& program,
                               const SolverSettings& settings,
                               std::string_view backend) {
  if (absl::Status status = ValidateProgram(program); !status.ok()) {
    return status;
  }
  absl::StatusOr<std::unique_ptr<ConicSolver>> solver = MakeSolver(backend);
  if (!solver.ok()) return solver.status();
  if (!(*solver)->Supports(program)) {
    return absl::UnimplementedError(absl::StrCat(
        "backend '", std::string(backend),
        "' cannot represent every row of program '", program.name, "'"));
  }
  return (*solver)->Solve(program, settings);
}

}  // namespace aroqdr
