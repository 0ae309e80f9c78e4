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

// Moving between solution vectors and policies, and counting what a
// reformulation emitted.

#ifndef AROQDR_EXTRACT_H_
#define AROQDR_EXTRACT_H_

#include <map>
#include <optional>
#include <string>

#include "Eigen/Core"
#include "absl/status/statusor.h"
#include "aroqdr/conic_program.h"
#include "aroqdr/layout.h"
#include "aroqdr/model.h"
#include "aroqdr/solver.h"

namespace aroqdr {

struct ExtractedPolicy {
  Eigen::VectorXd x;
  QdrCoefficients rule;
  // Multipliers of the robust rows, one per group; empty for ADR layouts.
  Eigen::VectorXd lambda;
  std::optional<double> tau;
  std::optional<double> cost_tau;
};

// Unpacks a solution vector laid out by `layout`. SDP layouts rebuild Q_j
// from the packed upper triangle, SOCP layouts from the diagonal entries
// q(p, j), and ADR layouts return Q_j = 0 with theta = 1.
absl::StatusOr<ExtractedPolicy> ExtractRule(const Eigen::VectorXd& values,
                                            const RuleLayout& layout);
// Requires status optimal and a values vector covering the layout.
absl::StatusOr<ExtractedPolicy> ExtractRule(const Solution& solution,
                                            const RuleLayout& layout);

// Inverse of ExtractRule on the rule slots: writes x, y0, W and Q into a
// zero vector of length layout.total. Multiplier and slack slots stay zero.
// Off-diagonal Q entries are dropped for diagonal layouts.
absl::StatusOr<Eigen::VectorXd> PackRule(const RuleLayout& layout,
                                         const Eigen::VectorXd& x,
                                         const QdrCoefficients& rule);

struct ProgramStats {
  std::string layout_kind;
  // Decision-rule dimension. SDP: n + k + kl + k l(l+1)/2 (k l with a
  // diagonal Q). SOCP: n + k + kl + G + 2 G l over G groups, counting the
  // multipliers, the slacks s and the aliases sigma. ADR: n + k + kl.
  int rule_dim = 0;
  int total_vars = 0;
  std::map<std::string, int> row_counts;  // keyed by ConeKindName
  int psd_max_side = 0;
  int soc_max_dim = 0;
};

ProgramStats ComputeProgramStats(const ConicProgram& program);

}  // namespace aroqdr

#endif  // AROQDR_EXTRACT_H_
