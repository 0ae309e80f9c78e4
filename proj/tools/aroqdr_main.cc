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

// aroqdr: reformulate, solve, verify and benchmark adjustable robust LPs.
//
//   aroqdr reformulate problem.json --method sdp --theta 0.5
//   aroqdr solve problem.json --method socp --out solution.json
//   aroqdr verify problem.json solution.json --tol 1e-6
//   aroqdr sweep problem.json --method sdp --theta 0,0.5,1
//   aroqdr lotsizing --N 2,3 --instances 5 --seed 7 --out results.csv
//
// Exit codes: 0 success, 1 verification failure or infeasible/unbounded
// problem, 2 usage or input error, 3 solver failure.
//
// Solver settings come from, in increasing priority, the built-in defaults,
// the JSON file named by $AROQDR_SOLVER_CONFIG, the file given by --config,
// and the flags --abs-tol, --rel-tol and --max-iter. The file may use nested
// ({"solver": {"abs_tol": 1e-9}}) or dotted ({"solver.abs_tol": 1e-9}) keys.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "aroqdr/conic_program.h"
#include "aroqdr/experiment.h"
#include "aroqdr/extract.h"
#include "aroqdr/pipeline.h"
#include "aroqdr/problem_io.h"
#include "aroqdr/solver.h"
#include "aroqdr/verify.h"
#include "json.hpp"

namespace aroqdr {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;
constexpr char kConfigEnv[] = "AROQDR_SOLVER_CONFIG";

struct SettingsFlags {
  std::string config_path;
  std::optional<double> abs_tol;
  std::optional<double> rel_tol;
  std::optional<int> max_iter;
  std::string backend = "ipm";
  bool verbose = false;
};

void AddSettingsFlags(CLI::App* command, SettingsFlags* flags) {
  command->add_option(
      "--config", flags->config_path,
      absl::StrCat("JSON solver settings (default $", kConfigEnv, ")"));
  command->add_option("--abs-tol", flags->abs_tol, "absolute tolerance");
  command->add_option("--rel-tol", flags->rel_tol, "relative tolerance");
  command->add_option("--max-iter", flags->max_iter, "iteration limit");
  command->add_option("--solver", flags->backend, "conic backend")
      ->check(CLI::IsMember(AvailableBackends()));
  command->add_flag("--verbose", flags->verbose, "print solver progress");
}

absl::Status ApplyConfigKey(const std::string& key, const nlohmann::json& value,
                            SolverSettings* settings) {
  if (!value.is_number()) {
    return absl::InvalidArgumentError(
        absl::StrCat("config key ", key, " must be a number"));
  }
  if (key == "solver.abs_tol") {
    settings->abs_tol = value.get<double>();
  } else if (key == "solver.rel_tol") {
    settings->rel_tol = value.get<double>();
  } else if (key == "solver.max_iter") {
    if (!value.is_number_integer()) {
      return absl::InvalidArgumentError("solver.max_iter must be an integer");
    }
    settings->max_iter = value.get<int>();
  } else {
    return absl::InvalidArgumentError(absl::StrCat("unknown config key ", key));
  }
  return absl::OkStatus();
}

absl::Status LoadSettingsFile(const std::string& path,
                              SolverSettings* settings) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(*text);
  } catch (const nlohmann::json::parse_error& e) {
    return absl::InvalidArgumentError(
        absl::StrCat(path, ": invalid JSON: ", e.what()));
  }
  if (!root.is_object()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path, ": expected a JSON object"));
  }
  for (const auto& [key, value] : root.items()) {
    if (key == "solver" && value.is_object()) {
      for (const auto& [inner, inner_value] : value.items()) {
        absl::Status status = ApplyConfigKey(absl::StrCat("solver.", inner),
                                             inner_value, settings);
        if (!status.ok())
          return absl::InvalidArgumentError(
              absl::StrCat(path, ": ", status.message()));
      }
      continue;
    }
    absl::Status status = ApplyConfigKey(key, value, settings);
    if (!status.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat(path, ": ", status.message()));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<SolverSettings> ResolveSettings(const SettingsFlags& flags) {
  SolverSettings settings;
  std::string path = flags.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv(kConfigEnv); env != nullptr) path = env;
  }
  if (!path.empty()) {
    if (absl::Status status = LoadSettingsFile(path, &settings); !status.ok()) {
      return status;
    }
  }
  if (flags.abs_tol) settings.abs_tol = *flags.abs_tol;
  if (flags.rel_tol) settings.rel_tol = *flags.rel_tol;
  if (flags.max_iter) settings.max_iter = *flags.max_iter;
  settings.verbose = flags.verbose;
  if (!(settings.abs_tol > 0.0) || !(settings.rel_tol > 0.0) ||
      settings.max_iter < 1) {
    return absl::InvalidArgumentError(
        "tolerances must be positive and max_iter at least 1");
  }
  return settings;
}

int ReportError(const absl::Status& status, int code) {
  std::cerr << "aroqdr: " << status.message() << "\n";
  return code;
}

// Input and argument problems are usage errors; anything else is the
// solver's fault.
int ExitCodeFor(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kInvalidArgument:
    case absl::StatusCode::kNotFound:
    case absl::StatusCode::kFailedPrecondition:
    case absl::StatusCode::kUnimplemented:
      return kExitUsage;
    default:
      return kExitSolver;
  }
}

int ExitCodeFor(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return kExitOk;
    case SolveStatus::kInfeasible:
    case SolveStatus::kUnbounded:
      return kExitFailed;
    case SolveStatus::kNumericalError:
    case SolveStatus::kIterationLimit:
      return kExitSolver;
  }
  return kExitSolver;
}

// Writes to `path`, or to stdout when it is empty or "-".
absl::Status Emit(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
    return absl::OkStatus();
  }
  return WriteFile(path, contents);
}

std::string FormatStats(const ProgramStats& stats) {
  std::string out =
      absl::StrFormat("layout      %s\nrule_dim    %d\ntotal_vars  %d\n",
                      stats.layout_kind, stats.rule_dim, stats.total_vars);
  for (const auto& [kind, count] : stats.row_counts) {
    absl::StrAppend(&out, absl::StrFormat("rows.%-7s %d\n", kind, count));
  }
  if (stats.psd_max_side > 0) {
    absl::StrAppend(&out,
                    absl::StrFormat("psd_max_side %d\n", stats.psd_max_side));
  }
  if (stats.soc_max_dim > 0) {
    absl::StrAppend(&out,
                    absl::StrFormat("soc_max_dim %d\n", stats.soc_max_dim));
  }
  return out;
}

// reformulate ---------------------------------------------------------------

struct ReformulateArgs {
  std::string problem_path;
  std::string method = "sdp";
  double theta = 0.5;
  std::string out;
  bool stats_only = false;
};

int RunReformulate(const ReformulateArgs& args) {
  absl::StatusOr<Method> method = ParseMethod(args.method);
  if (!method.ok()) return ReportError(method.status(), kExitUsage);
  absl::StatusOr<AroProblem> problem = LoadProblem(args.problem_path);
  if (!problem.ok()) return ReportError(problem.status(), kExitUsage);
  absl::StatusOr<ConicProgram> program =
      BuildProgram(*problem, *method, args.theta);
  if (!program.ok()) return ReportError(program.status(), kExitUsage);
  std::string text;
  if (!args.stats_only) text = DumpProgram(*program);
  absl::StrAppend(&text, FormatStats(ComputeProgramStats(*program)));
  if (absl::Status status = Emit(args.out, text); !status.ok()) {
    return ReportError(status, kExitUsage);
  }
  return kExitOk;
}

// solve ---------------------------------------------------------------------

struct SolveArgs {
  std::string problem_path;
  std::string method = "sdp";
  double theta = 0.5;
  std::string out;
  SettingsFlags settings;
};

int RunSolve(const SolveArgs& args) {
  absl::StatusOr<SolverSettings> settings = ResolveSettings(args.settings);
  if (!settings.ok()) return ReportError(settings.status(), kExitUsage);
  absl::StatusOr<Method> method = ParseMethod(args.method);
  if (!method.ok()) return ReportError(method.status(), kExitUsage);
  absl::StatusOr<AroProblem> problem = LoadProblem(args.problem_path);
  if (!problem.ok()) return ReportError(problem.status(), kExitUsage);

  absl::StatusOr<PolicyResult> result = SolvePolicy(
      *problem, *method, args.theta, *settings, args.settings.backend);
  if (!result.ok())
    return ReportError(result.status(), ExitCodeFor(result.status()));

  Policy policy;
  policy.status = std::string(SolveStatusName(result->solution.status));
  policy.method = std::string(MethodName(*method));
  policy.solver = result->solution.solver_name;
  policy.objective = result->solution.objective_value;
  if (result->policy.has_value()) {
    policy.x = result->policy->x;
    policy.rule = result->policy->rule;
    policy.tau = result->policy->tau;
  }
  nlohmann::json json = PolicyToJson(policy);
  if (absl::Status status = Emit(args.out, json.dump(2) + "\n"); !status.ok()) {
    return ReportError(status, kExitUsage);
  }
  std::cerr << absl::StrFormat("%s: %s, objective %.10g, %d iterations\n",
                               policy.method, policy.status, policy.objective,
                               result->solution.iterations);
  return ExitCodeFor(result->solution.status);
}

// verify --------------------------------------------------------------------

struct VerifyArgs {
  std::string problem_path;
  std::string solution_path;
  double tol = kVerifyTolerance;
  int samples = 0;
  uint64_t seed = 1;
  bool json = false;
  std::string out;
};

std::string FormatVector(const Eigen::VectorXd& v) {
  std::string out = "(";
  for (int i = 0; i < v.size(); ++i) {
    absl::StrAppend(&out, i == 0 ? "" : ", ", absl::StrFormat("%.6g", v(i)));
  }
  return out + ")";
}

std::string FormatReport(const VerificationReport& report) {
  std::string out =
      absl::StrFormat("%-12s %14s  %s\n", "row", "worst_value", "status");
  for (const RowVerification& row : report.rows) {
    const bool ok = row.worst_value <= report.tolerance;
    absl::StrAppend(
        &out, absl::StrFormat("%-12s %14.6e  %s", row.name, row.worst_value,
                              ok ? "ok" : "VIOLATED"));
    if (!ok) absl::StrAppend(&out, "  z* = ", FormatVector(row.maximizer));
    absl::StrAppend(&out, "\n");
  }
  absl::StrAppend(&out,
                  absl::StrFormat("max violation %.6e (tolerance %.1e): %s\n",
                                  report.max_violation, report.tolerance,
                                  report.feasible ? "feasible" : "INFEASIBLE"));
  return out;
}

int RunVerify(const VerifyArgs& args) {
  absl::StatusOr<AroProblem> problem = LoadProblem(args.problem_path);
  if (!problem.ok()) return ReportError(problem.status(), kExitUsage);
  absl::StatusOr<Policy> policy = LoadPolicy(args.solution_path);
  if (!policy.ok()) return ReportError(policy.status(), kExitUsage);
  if (policy->status != "optimal") {
    return ReportError(absl::FailedPreconditionError(absl::StrCat(
                           args.solution_path, " holds no policy (status ",
                           policy->status, ")")),
                       kExitFailed);
  }
  absl::StatusOr<VerificationReport> report = VerifyRobustFeasibility(
      *problem, policy->x, policy->rule, args.tol, policy->tau);
  if (!report.ok()) return ReportError(report.status(), kExitUsage);

  std::string text =
      args.json ? ReportToJson(*report).dump(2) + "\n" : FormatReport(*report);
  if (args.samples > 0) {
    absl::StatusOr<double> sampled = SampleFeasibility(
        *problem, policy->x, policy->rule, args.samples, args.seed);
    if (!sampled.ok()) return ReportError(sampled.status(), kExitUsage);
    std::cerr << absl::StrFormat("max over %d samples: %.6e\n", args.samples,
                                 *sampled);
  }
  if (absl::Status status = Emit(args.out, text); !status.ok()) {
    return ReportError(status, kExitUsage);
  }
  return report->feasible ? kExitOk : kExitFailed;
}

// sweep ---------------------------------------------------------------------

struct SweepArgs {
  std::string problem_path;
  std::string method = "sdp";
  std::vector<double> thetas = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::string out;
  SettingsFlags settings;
};

int RunSweep(const SweepArgs& args) {
  absl::StatusOr<SolverSettings> settings = ResolveSettings(args.settings);
  if (!settings.ok()) return ReportError(settings.status(), kExitUsage);
  absl::StatusOr<Method> method = ParseMethod(args.method);
  if (!method.ok()) return ReportError(method.status(), kExitUsage);
  absl::StatusOr<AroProblem> problem = LoadProblem(args.problem_path);
  if (!problem.ok()) return ReportError(problem.status(), kExitUsage);

  std::string text = "theta,value,status\n";
  int exit_code = kExitOk;
  for (double theta : args.thetas) {
    absl::StatusOr<PolicyResult> result =
        SolvePolicy(*problem, *method, theta, *settings, args.settings.backend);
    if (!result.ok())
      return ReportError(result.status(), ExitCodeFor(result.status()));
    absl::StrAppend(
        &text, absl::StrFormat(
                   "%.17g,%.10f,%s\n", theta, result->solution.objective_value,
                   std::string(SolveStatusName(result->solution.status))));
    exit_code = std::max(exit_code, ExitCodeFor(result->solution.status));
  }
  if (absl::Status status = Emit(args.out, text); !status.ok()) {
    return ReportError(status, kExitUsage);
  }
  return exit_code;
}

// lotsizing -----------------------------------------------------------------

struct LotSizingArgs {
  ExperimentConfig config;
  std::vector<std::string> methods = {"adr", "sdp", "socp"};
  std::string out;
  bool no_timing = false;
  SettingsFlags settings;
};

int RunLotSizing(LotSizingArgs args) {
  absl::StatusOr<SolverSettings> settings = ResolveSettings(args.settings);
  if (!settings.ok()) return ReportError(settings.status(), kExitUsage);
  args.config.settings = *settings;
  args.config.backend = args.settings.backend;
  args.config.methods.clear();
  for (const std::string& name : args.methods) {
    absl::StatusOr<Method> method = ParseMethod(name);
    if (!method.ok()) return ReportError(method.status(), kExitUsage);
    args.config.methods.push_back(*method);
  }
  if (absl::Status status = ValidateConfig(args.config); !status.ok()) {
    return ReportError(status, kExitUsage);
  }
  absl::StatusOr<ExperimentResult> result = RunExperiment(args.config);
  if (!result.ok()) return ReportError(result.status(), kExitSolver);

  const bool timing = !args.no_timing;
  if (args.out.empty()) {
    std::cout << FormatCsv(result->records, timing);
  } else if (absl::Status status =
                 WriteFile(args.out, FormatCsv(result->records, timing));
             !status.ok()) {
    return ReportError(status, kExitUsage);
  }
  std::cerr << FormatSummary(result->summary, timing);
  for (const SummaryRow& row : result->summary) {
    if (row.solved == 0) return kExitSolver;
  }
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Adjustable robust LPs with quadratic decision rules"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "aroqdr 0.1.0");

  ReformulateArgs reformulate;
  CLI::App* reformulate_cmd = app.add_subcommand(
      "reformulate", "print the conic program and its sizes");
  reformulate_cmd
      ->add_option("problem", reformulate.problem_path, "problem JSON")
      ->required();
  reformulate_cmd->add_option("--method", reformulate.method,
                              "adr, sdp, sdp-diag or socp");
  reformulate_cmd->add_option("--theta", reformulate.theta, "rule weight")
      ->check(CLI::Range(0.0, 1.0));
  reformulate_cmd->add_option("--out", reformulate.out, "output file");
  reformulate_cmd->add_flag("--stats-only", reformulate.stats_only,
                            "skip the program dump");

  SolveArgs solve;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "solve and write the policy as JSON");
  solve_cmd->add_option("problem", solve.problem_path, "problem JSON")
      ->required();
  solve_cmd->add_option("--method", solve.method, "adr, sdp, sdp-diag or socp");
  solve_cmd->add_option("--theta", solve.theta, "rule weight")
      ->check(CLI::Range(0.0, 1.0));
  solve_cmd->add_option("--out", solve.out, "solution file (default stdout)");
  AddSettingsFlags(solve_cmd, &solve.settings);

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "certify a policy against every row");
  verify_cmd->add_option("problem", verify.problem_path, "problem JSON")
      ->required();
  verify_cmd->add_option("solution", verify.solution_path, "solution JSON")
      ->required();
  verify_cmd->add_option("--tol", verify.tol, "allowed violation")
      ->check(CLI::PositiveNumber);
  verify_cmd
      ->add_option("--samples", verify.samples,
                   "extra Monte-Carlo samples (0 to skip)")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", verify.seed, "sampling seed");
  verify_cmd->add_flag("--json", verify.json, "print the report as JSON");
  verify_cmd->add_option("--out", verify.out, "report file");

  SweepArgs sweep;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "optimal value for a list of theta values");
  sweep_cmd->add_option("problem", sweep.problem_path, "problem JSON")
      ->required();
  sweep_cmd->add_option("--method", sweep.method, "adr, sdp, sdp-diag or socp");
  sweep_cmd->add_option("--theta", sweep.thetas, "comma-separated values")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  sweep_cmd->add_option("--out", sweep.out, "CSV file");
  AddSettingsFlags(sweep_cmd, &sweep.settings);

  LotSizingArgs lot;
  CLI::App* lot_cmd =
      app.add_subcommand("lotsizing", "run the lot-sizing comparison");
  lot_cmd->add_option("--N", lot.config.N_values, "store counts, e.g. 2,3,4,5")
      ->delimiter(',');
  lot_cmd->add_option("--instances", lot.config.instances_per_N,
                      "instances per N");
  lot_cmd->add_option("--theta", lot.config.theta, "rule weight")
      ->check(CLI::Range(0.0, 1.0));
  lot_cmd->add_option("--gamma", lot.config.gamma, "capacity")
      ->check(CLI::PositiveNumber);
  lot_cmd->add_option("--method", lot.methods, "methods, e.g. adr,sdp,socp")
      ->delimiter(',');
  lot_cmd->add_option("--seed", lot.config.seed, "seed of the first instance");
  lot_cmd->add_option("--demand-seed", lot.config.demand_seed,
                      "seed of the demand draws");
  lot_cmd->add_option("--draws", lot.config.demand_draws,
                      "demand draws per instance");
  lot_cmd->add_option("--tol", lot.config.verify_tol, "verification tolerance")
      ->check(CLI::PositiveNumber);
  lot_cmd->add_option("--jobs", lot.config.jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  lot_cmd->add_option("--out", lot.out, "CSV file (default stdout)");
  lot_cmd->add_flag("--no-timing", lot.no_timing,
                    "write solve_ms as 0 for reproducible output");
  AddSettingsFlags(lot_cmd, &lot.settings);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*reformulate_cmd) return RunReformulate(reformulate);
  if (*solve_cmd) return RunSolve(solve);
  if (*verify_cmd) return RunVerify(verify);
  if (*sweep_cmd) return RunSweep(sweep);
  if (*lot_cmd) return RunLotSizing(lot);
  return kExitUsage;
}

}  // namespace
}  // namespace aroqdr

int main(int argc, char** argv) { return aroqdr::Main(argc, argv); }
