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

// Batch comparison of decision-rule methods on random lot-sizing instances.
//
// For every N and instance seed the runner solves each method, certifies the
// returned policy with the exact oracle, draws demand from the ball (kept
// nonnegative by redrawing), and compares
//
//   m1 = 100 (v - t) / v   realized cost v against the clairvoyant LP t,
//   m2 = 100 (w - v*) / w  the method's optimal value v* against the LP w
//                          at demand gamma / sqrt(2) in every store.
//
// Results do not depend on `jobs`: instances are processed independently and
// stored by index.

#ifndef AROQDR_EXPERIMENT_H_
#define AROQDR_EXPERIMENT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "aroqdr/lotsizing.h"
#include "aroqdr/pipeline.h"
#include "aroqdr/solver.h"
#include "aroqdr/verify.h"

namespace aroqdr {

struct ExperimentConfig {
  std::vector<int> N_values = {2, 3, 4, 5};
  int instances_per_N = 50;
  double theta = 0.5;
  double gamma = kDefaultGamma;
  std::vector<Method> methods = {Method::kAdrSocp, Method::kQdrSdp,
                                 Method::kSepQdrSocp};
  // Instance i uses seed + i.
  uint64_t seed = 1;
  uint64_t demand_seed = 2;
  // m1 and the clairvoyant value are averaged over this many draws.
  int demand_draws = 1;
  int jobs = 1;
  SolverSettings settings;
  std::string backend = "ipm";
  double verify_tol = kVerifyTolerance;
};

struct InstanceRecord {
  int N = 0;
  Method method = Method::kQdrSdp;
  double theta = 0.0;
  uint64_t seed = 0;
  double value = 0.0;     // optimal c'x + tau
  double realized = 0.0;  // mean realized cost over the draws
  double td = 0.0;        // mean clairvoyant cost over the draws
  double wc = 0.0;
  double m1 = 0.0;
  double m2 = 0.0;
  double max_violation = 0.0;
  double solve_ms = 0.0;
  int rule_dim = 0;
  int total_vars = 0;
  // "optimal" when the record counts; otherwise why it was excluded.
  std::string status;

  bool ok() const { return status == "optimal"; }
};

struct SummaryRow {
  int N = 0;
  Method method = Method::kQdrSdp;
  int solved = 0;
  int excluded = 0;
  double mean_m1 = 0.0;
  double mean_m2 = 0.0;
  double mean_solve_ms = 0.0;
  int rule_dim = 0;
  int total_vars = 0;
};

struct ExperimentResult {
  std::vector<InstanceRecord> records;  // by N, then seed, then method
  std::vector<SummaryRow> summary;      // by N, then method
};

absl::Status ValidateConfig(const ExperimentConfig& config);

// Runs one instance for every configured method. Failures of single methods
// become records with a non-optimal status.
absl::StatusOr<std::vector<InstanceRecord>> RunInstance(
    const ExperimentConfig& config, int N, uint64_t seed);

absl::StatusOr<ExperimentResult> RunExperiment(const ExperimentConfig& config);

std::vector<SummaryRow> Summarize(const ExperimentConfig& config,
                                  const std::vector<InstanceRecord>& records);

// CSV with header N,method,theta,seed,value,td,wc,m1,m2,solve_ms,status.
// Without timing the solve_ms column is written as 0 so that reruns are
// byte-identical.
std::string FormatCsv(const std::vector<InstanceRecord>& records,
                      bool include_timing = true);

// Console table with mean m1 (true-demand comparison) and mean m2
// (worst-case comparison) per N and method.
std::string FormatSummary(const std::vector<SummaryRow>& summary,
                          bool include_timing = true);

}  // namespace aroqdr

#endif  // AROQDR_EXPERIMENT_H_
