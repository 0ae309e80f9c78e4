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

// Reformulate, solve and extract in one call.

#ifndef AROQDR_PIPELINE_H_
#define AROQDR_PIPELINE_H_

#include <optional>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "aroqdr/conic_program.h"
#include "aroqdr/extract.h"
#include "aroqdr/model.h"
#include "aroqdr/solver.h"

namespace aroqdr {

enum class Method {
  kAdrSocp,         // affine rule, classical cone counterpart
  kQdrSdp,          // general quadratic rule
  kQdrSdpDiagonal,  // quadratic rule with diagonal Q through the SDP
  kSepQdrSocp,      // separable quadratic rule through the SOCP
};

std::string_view MethodName(Method method);
// Accepts the names above plus the short forms "adr", "sdp", "sdp-diag"
// and "socp".
absl::StatusOr<Method> ParseMethod(std::string_view name);

absl::StatusOr<ConicProgram> BuildProgram(const AroProblem& problem,
                                          Method method, double theta);

struct PolicyResult {
  Method method = Method::kQdrSdp;
  Solution solution;
  // Set only when the solution is optimal.
  std::optional<ExtractedPolicy> policy;
  ProgramStats stats;
  double solve_ms = 0.0;
};

// Builds, solves and, on optimality, extracts the policy. Solver statuses
// other than optimal are reported in `solution.status`, not as errors.
absl::StatusOr<PolicyResult> SolvePolicy(const AroProblem& problem,
                                         Method method, double theta,
                                         const SolverSettings& settings = {},
                                         std::string_view backend = "ipm");

}  // namespace aroqdr

#endif  // AROQDR_PIPELINE_H_
