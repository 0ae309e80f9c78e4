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

// JSON persistence for problems and solved policies. The schema is described
// in docs/file_formats.md. Doubles are written as shortest round-trip decimal
// strings, so load(save(p)) == p bit for bit.

#ifndef AROQDR_PROBLEM_IO_H_
#define AROQDR_PROBLEM_IO_H_

#include <optional>
#include <string>

#include "Eigen/Core"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "aroqdr/model.h"
#include "json.hpp"

namespace aroqdr {

inline constexpr int kProblemSchemaVersion = 1;
inline constexpr int kPolicySchemaVersion = 1;

nlohmann::json ProblemToJson(const AroProblem& problem);
absl::StatusOr<AroProblem> ProblemFromJson(const nlohmann::json& json);

std::string ProblemToString(const AroProblem& problem);
// Parse errors carry the line number; schema errors name the field.
absl::StatusOr<AroProblem> ParseProblem(const std::string& text);

absl::Status SaveProblem(const AroProblem& problem, const std::string& path);
absl::StatusOr<AroProblem> LoadProblem(const std::string& path);

nlohmann::json RuleToJson(const QdrCoefficients& rule);
absl::StatusOr<QdrCoefficients> RuleFromJson(const nlohmann::json& json);

// A first-stage decision plus decision rule, as written by `aroqdr solve`.
struct Policy {
  std::string status;
  std::string method;
  std::string solver;
  double objective = 0.0;
  Eigen::VectorXd x;
  QdrCoefficients rule;
  // Epigraph variable of the adjustable cost row, when the problem has w.
  std::optional<double> tau;

  bool operator==(const Policy& other) const;
};

nlohmann::json PolicyToJson(const Policy& policy);
absl::StatusOr<Policy> PolicyFromJson(const nlohmann::json& json);
absl::Status SavePolicy(const Policy& policy, const std::string& path);
absl::StatusOr<Policy> LoadPolicy(const std::string& path);

// Reads a whole file; NotFound names the path.
absl::StatusOr<std::string> ReadFile(const std::string& path);
absl::Status WriteFile(const std::string& path, const std::string& contents);

}  // namespace aroqdr

#endif  // AROQDR_PROBLEM_IO_H_
