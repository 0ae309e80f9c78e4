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

#include "aroqdr/experiment.h"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace aroqdr {
namespace {

std::vector<InstanceRecord> FailedRecords(const ExperimentConfig& config, int N,
                                          uint64_t seed,
                                          const std::string& status) {
  std::vector<InstanceRecord> records;
  for (Method method : config.methods) {
    InstanceRecord record;
    record.N = N;
    record.method = method;
    record.theta = config.theta;
    record.seed = seed;
    record.status = status;
    records.push_back(record);
  }
  return records;
}

}  // namespace

absl::Status ValidateConfig(const ExperimentConfig& config) {
  if (config.N_values.empty()) {
    return absl::InvalidArgumentError("no store counts N given");
  }
  for (int N : config.N_values) {
    if (N < 2) {
      return absl::InvalidArgumentError(
          absl::StrCat("N must be >= 2, got ", N));
    }
  }
  if (config.instances_per_N < 1) {
    return absl::InvalidArgumentError("instances per N must be at least 1");
  }
  if (config.demand_draws < 1) {
    return absl::InvalidArgumentError("demand draws must be at least 1");
  }
  if (!(config.theta >= 0.0 && config.theta <= 1.0)) {
    return absl::InvalidArgumentError("theta must lie in [0, 1]");
  }
  if (config.methods.empty()) {
    return absl::InvalidArgumentError("no methods selected");
  }
  if (config.jobs < 1) {
    return absl::InvalidArgumentError("jobs must be at least 1");
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<InstanceRecord>> RunInstance(
    const ExperimentConfig& config, int N, uint64_t seed) {
  absl::StatusOr<LotSizingInstance> instance =
      GenerateInstance(N, config.gamma, seed);
  if (!instance.ok()) return instance.status();
  const AroProblem problem = BuildAro(*instance);

  absl::StatusOr<double> wc =
      SolveWc(*instance, config.settings, config.backend);
  if (!wc.ok()) {
    return FailedRecords(config, N, seed,
                         absl::StrCat("wc_failed: ", wc.status().message()));
  }
  std::seed_seq sequence{static_cast<uint32_t>(config.demand_seed),
                         static_cast<uint32_t>(config.demand_seed >> 32),
                         static_cast<uint32_t>(seed),
                         static_cast<uint32_t>(seed >> 32),
                         static_cast<uint32_t>(N)};
  std::mt19937_64 rng(sequence);
  std::vector<Eigen::VectorXd> demands;
  std::vector<double> tds;
  double td_mean = 0.0;
  for (int draw = 0; draw < config.demand_draws; ++draw) {
    demands.push_back(SampleDemand(*instance, rng));
    absl::StatusOr<double> td =
        SolveTd(*instance, demands.back(), config.settings, config.backend);
    if (!td.ok()) {
      return FailedRecords(config, N, seed,
                           absl::StrCat("td_failed: ", td.status().message()));
    }
    tds.push_back(*td);
    td_mean += *td / config.demand_draws;
  }

  std::vector<InstanceRecord> records;
  for (Method method : config.methods) {
    InstanceRecord record;
    record.N = N;
    record.method = method;
    record.theta = config.theta;
    record.seed = seed;
    record.wc = *wc;
    record.td = td_mean;
    absl::StatusOr<PolicyResult> result = SolvePolicy(
        problem, method, config.theta, config.settings, config.backend);
    if (!result.ok()) {
      record.status = absl::StrCat("error: ", result.status().message());
      records.push_back(record);
      continue;
    }
    record.solve_ms = result->solve_ms;
    record.rule_dim = result->stats.rule_dim;
    record.total_vars = result->stats.total_vars;
    record.value = result->solution.objective_value;
    if (!result->policy.has_value()) {
      record.status = std::string(SolveStatusName(result->solution.status));
      records.push_back(record);
      continue;
    }
    const ExtractedPolicy& policy = *result->policy;
    absl::StatusOr<VerificationReport> report = VerifyRobustFeasibility(
        problem, policy.x, policy.rule, config.verify_tol, policy.tau);
    if (!report.ok()) {
      record.status = absl::StrCat("error: ", report.status().message());
      records.push_back(record);
      continue;
    }
    record.max_violation = report->max_violation;
    if (!report->feasible) {
      record.status = "verify_failed";
      records.push_back(record);
      continue;
    }
    double m1 = 0.0;
    record.realized = 0.0;
    bool realized_ok = true;
    for (size_t draw = 0; draw < demands.size(); ++draw) {
      absl::StatusOr<double> v =
          RealizedValue(*instance, policy.x, policy.rule, demands[draw]);
      if (!v.ok()) {
        realized_ok = false;
        break;
      }
      absl::StatusOr<std::pair<double, double>> metrics =
          Metrics(*v, tds[draw], *wc);
      if (!metrics.ok()) {
        realized_ok = false;
        break;
      }
      m1 += metrics->first / config.demand_draws;
      record.realized += *v / config.demand_draws;
    }
    absl::StatusOr<std::pair<double, double>> worst =
        Metrics(record.value, record.td, *wc);
    if (!realized_ok || !worst.ok()) {
      record.status = "metrics_failed";
      records.push_back(record);
      continue;
    }
    record.m1 = m1;
    record.m2 = worst->second;
    record.status = "optimal";
    records.push_back(record);
  }
  return records;
}

absl::StatusOr<ExperimentResult> RunExperiment(const ExperimentConfig& config) {
  if (absl::Status status = ValidateConfig(config); !status.ok()) return status;
  struct Task {
    int N;
    uint64_t seed;
  };
  std::vector<Task> tasks;
  for (int N : config.N_values) {
    for (int i = 0; i < config.instances_per_N; ++i) {
      tasks.push_back({N, config.seed + static_cast<uint64_t>(i)});
    }
  }
  std::vector<absl::StatusOr<std::vector<InstanceRecord>>> outputs(
      tasks.size(), absl::UnknownError("not run"));
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t t = next++; t < tasks.size(); t = next++) {
      outputs[t] = RunInstance(config, tasks[t].N, tasks[t].seed);
    }
  };
  const int threads =
      std::min<int>(config.jobs, static_cast<int>(tasks.size()));
  std::vector<std::thread> pool;
  for (int j = 1; j < threads; ++j) pool.emplace_back(worker);
  worker();
  for (std::thread& thread : pool) thread.join();

  ExperimentResult result;
  for (auto& output : outputs) {
    if (!output.ok()) return output.status();
    for (InstanceRecord& record : *output) {
      result.records.push_back(std::move(record));
    }
  }
  result.summary = Summarize(config, result.records);
  return result;
}

std::vector<SummaryRow> Summarize(const ExperimentConfig& config,
                                  const std::vector<InstanceRecord>& records) {
  std::vector<SummaryRow> summary;
  for (int N : config.N_values) {
    for (Method method : config.methods) {
      SummaryRow row;
      row.N = N;
      row.method = method;
      for (const InstanceRecord& record : records) {
        if (record.N != N || record.method != method) continue;
        if (record.rule_dim > 0) {
          row.rule_dim = record.rule_dim;
          row.total_vars = record.total_vars;
        }
        if (!record.ok()) {
          ++row.excluded;
          continue;
        }
        ++row.solved;
        row.mean_m1 += record.m1;
        row.mean_m2 += record.m2;
        row.mean_solve_ms += record.solve_ms;
      }
      if (row.solved > 0) {
        row.mean_m1 /= row.solved;
        row.mean_m2 /= row.solved;
        row.mean_solve_ms /= row.solved;
      }
      summary.push_back(row);
    }
  }
  return summary;
}

std::string FormatCsv(const std::vector<InstanceRecord>& records,
                      bool include_timing) {
  std::string out = "N,method,theta,seed,value,td,wc,m1,m2,solve_ms,status\n";
  for (const InstanceRecord& r : records) {
    std::string status = r.status;
    std::replace(status.begin(), status.end(), ',', ';');
    std::replace(status.begin(), status.end(), '\n', ' ');
    absl::StrAppend(
        &out,
        absl::StrFormat("%d,%s,%.17g,%d,%.10f,%.10f,%.10f,%.8f,%.8f,%.3f,%s\n",
                        r.N, std::string(MethodName(r.method)), r.theta, r.seed,
                        r.value, r.td, r.wc, r.m1, r.m2,
                        include_timing ? r.solve_ms : 0.0, status));
  }
  return out;
}

std::string FormatSummary(const std::vector<SummaryRow>& summary,
                          bool include_timing) {
  std::string out = absl::StrFormat(
      "%-3s %-14s %7s %8s %10s %10s %10s %9s %7s\n", "N", "method", "solved",
      "excluded", "mean_m1", "mean_m2", "mean_ms", "rule_dim", "vars");
  for (const SummaryRow& row : summary) {
    absl::StrAppend(
        &out, absl::StrFormat(
                  "%-3d %-14s %7d %8d %10.4f %10.4f %10s %9d %7d\n", row.N,
                  std::string(MethodName(row.method)), row.solved, row.excluded,
                  row.mean_m1, row.mean_m2,
                  include_timing ? absl::StrFormat("%.1f", row.mean_solve_ms)
                                 : std::string("-"),
                  row.rule_dim, row.total_vars));
  }
  return out;
}

}  // namespace aroqdr
