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

// End-to-end acceptance run. Prints one PASS or FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "Eigen/Eigenvalues"
#include "absl/strings/str_format.h"
#include "aroqdr/experiment.h"
#include "aroqdr/extract.h"
#include "aroqdr/pipeline.h"
#include "aroqdr/reformulate_sdp.h"
#include "aroqdr/reformulate_socp.h"
#include "aroqdr/trust_region.h"
#include "aroqdr/verify.h"
#include "test_support.h"

namespace aroqdr {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void Report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", id, pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

bool Close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * (1.0 + std::abs(b));
}

struct CertificateCase {
  AroProblem problem;
  ExtractedPolicy policy;
};

// Criterion 1; keeps the solved policies for criterion 4.
std::vector<CertificateCase> SdpExactness() {
  const double thetas[] = {0.0, 0.3, 0.5, 1.0};
  std::mt19937_64 rng(20260001);
  std::vector<CertificateCase> cases;
  double worst = 0.0;
  int bad = 0;
  const auto start = Clock::now();
  for (int i = 0; i < 200; ++i) {
    const AroProblem problem = testing::RandomInstance(rng);
    const double theta = thetas[i % 4];
    absl::StatusOr<PolicyResult> result =
        SolvePolicy(problem, Method::kQdrSdp, theta);
    if (!result.ok() || !result->policy.has_value()) {
      ++bad;
      continue;
    }
    absl::StatusOr<VerificationReport> report = VerifyRobustFeasibility(
        problem, result->policy->x, result->policy->rule, kVerifyTolerance,
        result->policy->tau);
    if (!report.ok()) {
      ++bad;
      continue;
    }
    worst = std::max(worst, report->max_violation);
    if (!report->feasible) ++bad;
    cases.push_back({problem, *result->policy});
  }
  const double elapsed = Seconds(start);
  Report(1, bad == 0 && worst <= 1e-6 && elapsed < 120.0,
         absl::StrFormat("200 instances, %d failed, max violation %.3g, %.1f s",
                         bad, worst, elapsed));
  return cases;
}

void SeparableAgreement() {
  std::mt19937_64 rng(20260002);
  int bad = 0;
  double worst = 0.0;
  const auto start = Clock::now();
  for (int i = 0; i < 100; ++i) {
    const AroProblem problem = testing::RandomInstance(rng);
    const double theta = 0.5;
    absl::StatusOr<PolicyResult> sdp =
        SolvePolicy(problem, Method::kQdrSdpDiagonal, theta);
    absl::StatusOr<PolicyResult> socp =
        SolvePolicy(problem, Method::kSepQdrSocp, theta);
    if (!sdp.ok() || !socp.ok() || !sdp->policy || !socp->policy) {
      ++bad;
      continue;
    }
    const double v = socp->solution.objective_value;
    const double gap =
        std::abs(sdp->solution.objective_value - v) / (1.0 + std::abs(v));
    worst = std::max(worst, gap);
    if (gap > 1e-6) ++bad;
  }
  const double elapsed = Seconds(start);
  Report(2, bad == 0 && elapsed < 120.0,
         absl::StrFormat("100 instances, %d disagree, max |dv|/(1+|v|) %.3g, "
                         "%.1f s",
                         bad, worst, elapsed));
}

void AffineSpecialCase() {
  std::mt19937_64 rng(20260003);
  int bad = 0;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const AroProblem problem = testing::RandomInstance(rng);
    absl::StatusOr<PolicyResult> adr =
        SolvePolicy(problem, Method::kAdrSocp, 1);
    absl::StatusOr<PolicyResult> sdp = SolvePolicy(problem, Method::kQdrSdp, 1);
    absl::StatusOr<PolicyResult> socp =
        SolvePolicy(problem, Method::kSepQdrSocp, 1);
    if (!adr.ok() || !sdp.ok() || !socp.ok() || !adr->policy || !sdp->policy ||
        !socp->policy) {
      ++bad;
      continue;
    }
    const double v = adr->solution.objective_value;
    for (double other :
         {sdp->solution.objective_value, socp->solution.objective_value}) {
      const double gap = std::abs(other - v) / (1.0 + std::abs(v));
      worst = std::max(worst, gap);
      if (gap > 1e-6) ++bad;
    }
  }
  Report(3, bad == 0,
         absl::StrFormat("50 instances at theta = 1, %d mismatches, max "
                         "relative gap %.3g",
                         bad, worst));
}

void Certificates(const std::vector<CertificateCase>& cases) {
  int checked = 0;
  int bad = 0;
  double worst_eig = 0.0;
  for (const CertificateCase& c : cases) {
    for (int i = 0; i < c.problem.m(); ++i) {
      const RowQuadratic quad =
          RobustRowQuadratic(c.problem.rows[i], c.policy.x, c.policy.rule);
      const auto [A, B] = SLemmaMatrices(quad, c.problem.uncertainty.radius);
      const double lambda = std::max(0.0, c.policy.lambda(i));
      const Eigen::MatrixXd M = B - lambda * A;
      const double eig =
          Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(M).eigenvalues()(0);
      worst_eig = std::min(worst_eig, eig);
      absl::StatusOr<bool> ok = SLemmaCertificate(A, B, lambda, 1e-6);
      ++checked;
      if (!ok.ok() || !*ok) ++bad;
    }
  }
  Report(4, bad == 0 && checked > 0,
         absl::StrFormat("%d rows, %d uncertified, min eigenvalue of "
                         "B - lambda A %.3g",
                         checked, bad, worst_eig));
}

void StatsFormulas() {
  int bad = 0;
  int cases = 0;
  std::mt19937_64 rng(20260005);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const int grid[10][4] = {
      {1, 1, 1, 1}, {2, 4, 2, 6}, {2, 4, 2, 10}, {1, 2, 3, 2}, {3, 3, 3, 4},
      {2, 1, 2, 3}, {3, 2, 1, 4}, {1, 3, 2, 1},  {4, 9, 3, 5}, {2, 2, 4, 2}};
  for (const auto& dims : grid) {
    const int n = dims[0], k = dims[1], l = dims[2], m = dims[3];
    AroProblem problem;
    problem.n = n;
    problem.k = k;
    problem.uncertainty = {1.0, l};
    problem.c = Eigen::VectorXd::Ones(n);
    for (int i = 0; i < m; ++i) {
      ConstraintRow row{Eigen::VectorXd::Zero(n), Eigen::MatrixXd::Zero(n, l),
                        Eigen::VectorXd::Zero(k), 1.0,
                        Eigen::VectorXd::Zero(l)};
      for (int p = 0; p < n; ++p) row.a(p) = unif(rng);
      for (int j = 0; j < k; ++j) row.b(j) = unif(rng);
      problem.rows.push_back(row);
    }
    absl::StatusOr<ConicProgram> sdp = ReformulateSdp(problem, 0.5);
    absl::StatusOr<ConicProgram> socp = ReformulateSocp(problem, 0.5);
    absl::StatusOr<ConicProgram> adr = ReformulateAdrSocp(problem);
    ++cases;
    if (!sdp.ok() || !socp.ok() || !adr.ok()) {
      ++bad;
      continue;
    }
    const ProgramStats s = ComputeProgramStats(*sdp);
    const ProgramStats t = ComputeProgramStats(*socp);
    const ProgramStats a = ComputeProgramStats(*adr);
    const bool ok = s.rule_dim == n + k + k * l + k * l * (l + 1) / 2 &&
                    t.rule_dim == n + k + k * l + m + 2 * m * l &&
                    a.rule_dim == n + k + k * l &&
                    s.row_counts.at("psd") == m && s.psd_max_side == l + 1 &&
                    t.soc_max_dim == 3 && a.soc_max_dim == l + 1;
    if (!ok) ++bad;
  }
  Report(5, bad == 0,
         absl::StrFormat("%d grid cases, %d mismatches", cases, bad));
}

// A quadratic whose maximizer needs a component along the top eigenvector:
// g is orthogonal to it and too short to reach the boundary.
void HardCase(int l, std::mt19937_64& rng, Eigen::MatrixXd* Q,
              Eigen::VectorXd* g) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Eigen::MatrixXd basis(l, l);
  for (int i = 0; i < basis.size(); ++i) basis(i) = unif(rng);
  const Eigen::MatrixXd V =
      Eigen::HouseholderQR<Eigen::MatrixXd>(basis).householderQ() *
      Eigen::MatrixXd::Identity(l, l);
  Eigen::VectorXd eig(l);
  eig(0) = 1.0;
  for (int i = 1; i < l; ++i) eig(i) = -std::abs(unif(rng));
  *Q = V * eig.asDiagonal() * V.transpose();
  Eigen::VectorXd coef = Eigen::VectorXd::Zero(l);
  for (int i = 1; i < l; ++i) coef(i) = 0.2 * unif(rng);
  *g = V * coef;
}

void TrustRegionOracle() {
  std::mt19937_64 rng(20260006);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  int bad_grid = 0;
  int bad_samples = 0;
  int hard = 0;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const int l = 1 + i % 3;
    Eigen::MatrixXd Q;
    Eigen::VectorXd g(l);
    if (i % 5 == 4 && l > 1) {
      HardCase(l, rng, &Q, &g);
    } else {
      Q = testing::RandomSymmetric(l, 1.0, rng);
      for (int p = 0; p < l; ++p) g(p) = unif(rng);
    }
    const double c0 = unif(rng);
    const double radius = 0.5 + 1.5 * std::abs(unif(rng));
    const TrustRegionResult r = WorstCaseQuadratic(Q, g, c0, radius);
    if (r.hard_case) ++hard;
    const int steps = l == 1 ? 2000 : (l == 2 ? 400 : 40);
    const double grid = testing::GridMaxQuadratic(Q, g, c0, radius, steps);
    worst = std::max(worst, std::abs(grid - r.value));
    if (std::abs(grid - r.value) > 1e-4) ++bad_grid;
    for (int s = 0; s < 100000; ++s) {
      const Eigen::VectorXd z = SampleBall(l, radius, rng);
      if (z.dot(Q * z) + g.dot(z) + c0 > r.value + 1e-9) {
        ++bad_samples;
        break;
      }
    }
  }
  Report(6, bad_grid == 0 && bad_samples == 0 && hard > 0,
         absl::StrFormat("200 quadratics, %d off grid (max |diff| %.2g), %d "
                         "dominated by a sample, %d hard cases",
                         bad_grid, worst, bad_samples, hard));
}

struct ReferenceMeans {
  double adr, sdp, socp;
};

void LotSizing() {
  const std::map<int, ReferenceMeans> m1_ref = {
      {2, {67.7072, 64.7297, 64.9984}},
      {3, {67.5402, 63.9634, 64.4285}},
      {4, {70.6617, 65.9177, 66.6341}},
      {5, {68.8926, 63.6860, 64.5545}}};
  const std::map<int, ReferenceMeans> m2_ref = {
      {2, {17.2541, 20.7104, 20.6353}},
      {3, {30.3298, 36.4901, 35.6099}},
      {4, {42.1128, 49.4073, 48.2685}},
      {5, {46.9065, 55.1508, 53.9234}}};
  ExperimentConfig config;
  const auto start = Clock::now();
  absl::StatusOr<ExperimentResult> result = RunExperiment(config);
  const double elapsed = Seconds(start);
  if (!result.ok()) {
    Report(7, false,
           "experiment failed: " + std::string(result.status().message()));
    Report(8, false, "no experiment");
    Report(9, false, "no experiment");
    return;
  }
  std::printf("%s", FormatSummary(result->summary).c_str());

  std::map<std::pair<int, Method>, SummaryRow> rows;
  int excluded = 0;
  for (const SummaryRow& row : result->summary) {
    rows[{row.N, row.method}] = row;
    excluded += row.excluded;
  }
  bool order_ok = true;
  bool m1_ok = true;
  bool m2_ok = true;
  double m1_dev = 0.0;
  double m2_dev = 0.0;
  for (const auto& [N, ref] : m1_ref) {
    const SummaryRow& adr = rows[{N, Method::kAdrSocp}];
    const SummaryRow& sdp = rows[{N, Method::kQdrSdp}];
    const SummaryRow& socp = rows[{N, Method::kSepQdrSocp}];
    order_ok &= sdp.mean_m1 < adr.mean_m1 && sdp.mean_m2 > adr.mean_m2;
    const ReferenceMeans& r2 = m2_ref.at(N);
    const double d1[] = {adr.mean_m1 - ref.adr, sdp.mean_m1 - ref.sdp,
                         socp.mean_m1 - ref.socp};
    const double d2[] = {adr.mean_m2 - r2.adr, sdp.mean_m2 - r2.sdp,
                         socp.mean_m2 - r2.socp};
    for (double d : d1) m1_dev = std::max(m1_dev, std::abs(d));
    for (double d : d2) m2_dev = std::max(m2_dev, std::abs(d));
  }
  m1_ok = m1_dev <= 10.0;
  m2_ok = m2_dev <= 10.0;
  Report(7, order_ok && m1_ok && m2_ok && excluded == 0,
         absl::StrFormat("ordering %s, max |m1 - ref| %.2f pp (%s), max "
                         "|m2 - ref| %.2f pp (%s), %d excluded, %.0f s",
                         order_ok ? "holds" : "violated", m1_dev,
                         m1_ok ? "ok" : "outside 10 pp", m2_dev,
                         m2_ok ? "ok" : "outside 10 pp", excluded, elapsed));

  // Per-instance value ordering and clairvoyant bound.
  std::map<std::pair<int, uint64_t>, std::map<Method, double>> values;
  int realized_bad = 0;
  int records = 0;
  for (const InstanceRecord& r : result->records) {
    if (!r.ok()) continue;
    values[{r.N, r.seed}][r.method] = r.value;
    ++records;
    if (r.realized < r.td - 1e-6) ++realized_bad;
  }
  int order_bad = 0;
  for (const auto& [key, by_method] : values) {
    if (by_method.size() != 3) {
      ++order_bad;
      continue;
    }
    const double adr = by_method.at(Method::kAdrSocp);
    const double socp = by_method.at(Method::kSepQdrSocp);
    const double sdp = by_method.at(Method::kQdrSdp);
    if (!(adr >= socp - 1e-6 * (1 + std::abs(adr)) && socp >= sdp - 1e-6)) {
      ++order_bad;
    }
  }
  Report(8, order_bad == 0,
         absl::StrFormat("%zu instances, %d out of order", values.size(),
                         order_bad));
  Report(9, realized_bad == 0 && records > 0,
         absl::StrFormat("%d records, %d below the clairvoyant cost", records,
                         realized_bad));
}

void CostUncertaintyMonotone() {
  std::mt19937_64 rng(20260010);
  int bad = 0;
  double worst_zero = 0.0;
  for (int i = 0; i < 20; ++i) {
    AroProblem problem = testing::RandomInstance(rng);
    absl::StatusOr<PolicyResult> plain =
        SolvePolicy(problem, Method::kQdrSdp, 0.5);
    if (!plain.ok() || !plain->policy) {
      ++bad;
      continue;
    }
    double previous = -1e300;
    for (double rho : {0.0, 0.1, 1.0}) {
      problem.cost_uncertainty = CostUncertainty{problem.c, rho};
      absl::StatusOr<PolicyResult> r =
          SolvePolicy(problem, Method::kQdrSdp, 0.5);
      if (!r.ok() || !r->policy) {
        ++bad;
        break;
      }
      const double v = r->solution.objective_value;
      if (v < previous - 1e-7 * (1 + std::abs(previous))) ++bad;
      previous = v;
      if (rho == 0.0) {
        const double p = plain->solution.objective_value;
        const double gap = std::abs(v - p) / (1 + std::abs(p));
        worst_zero = std::max(worst_zero, gap);
        if (gap > 1e-7) ++bad;
      }
    }
  }
  Report(10, bad == 0,
         absl::StrFormat("20 instances, %d violations, max gap at rho = 0 %.3g",
                         bad, worst_zero));
}

}  // namespace
}  // namespace aroqdr

int main() {
  using namespace aroqdr;
  const std::vector<CertificateCase> cases = SdpExactness();
  SeparableAgreement();
  AffineSpecialCase();
  Certificates(cases);
  StatsFormulas();
  TrustRegionOracle();
  LotSizing();
  CostUncertaintyMonotone();
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
