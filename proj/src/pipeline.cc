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

#include "aroqdr/pipeline.h"

#include <chrono>

#include "absl/strings/str_cat.h"
#include "aroqdr/reformulate_sdp.h"
#include "aroqdr/reformulate_socp.h"

namespace aroqdr {

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kAdrSocp:
      return "adr_socp";
    case Method::kQdrSdp:
      return "qdr_sdp";
    case Method::kQdrSdpDiagonal:
      return "qdr_sdp_diag";
    case Method::kSepQdrSocp:
      return "sep_qdr_socp";
  }
  return "unknown";
}

absl::StatusOr<Method> ParseMethod(std::string_view name) {
  if (name == "adr_socp" || name == "adr") return Method::kAdrSocp;
  if (name == "qdr_sdp" || name == "sdp") return Method::kQdrSdp;
  if (name == "qdr_sdp_diag" || name == "sdp-diag") {
    return Method::kQdrSdpDiagonal;
  }
  if (name == "sep_qdr_socp" || name == "socp") return Method::kSepQdrSocp;
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown method '", std::string(name),
      "'; expected one of adr_socp, qdr_sdp, qdr_sdp_diag, sep_qdr_socp"));
}

absl::StatusOr<ConicProgram> BuildProgram(const AroProblem& problem,
                                          Method method, double theta) {
  switch (method) {
    case Method::kAdrSocp:
      return ReformulateAdrSocp(problem);
    case Method::kQdrSdp:
      return ReformulateSdp(problem, theta);
    case Method::kQdrSdpDiagonal:
      return ReformulateSdp(problem, theta, {.diagonal_q = true});
    case Method::kSepQdrSocp:
      return ReformulateSocp(problem, theta);
  }
  return absl::InvalidArgumentError("unknown method");
}

absl::StatusOr<PolicyResult> SolvePolicy(const AroProblem& problem,
                                         Method method, double theta,
                                         const SolverSettings& settings,
                                         std::string_view backend) {
  absl::StatusOr<ConicProgram> program = BuildProgram(problem, method, theta);
  if (!program.ok()) return program.status();
  PolicyResult result;
  result.method = method;
  result.stats = ComputeProgramStats(*program);
  const auto start = std::chrono::steady_clock::now();
  absl::StatusOr<Solution> solution = Solve(*program, settings, backend);
  result.solve_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  if (!solution.ok()) return solution.status();
  result.solution = *std::move(solution);
  if (result.solution.status == SolveStatus::kOptimal) {
    absl::StatusOr<ExtractedPolicy> policy =
        ExtractRule(result.solution, *program->layout);
    if (!policy.ok()) return policy.status();
    result.policy = *std::move(policy);
  }
  return result;
}

}  // namespace aroqdr
