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

#include "solvers/barrier.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "Eigen/QR"
#include "solvers/cones.h"
#include "solvers/kkt.h"

namespace aroqdr {
namespace {

using internal::ConeDims;
using internal::ConeScaling;
using internal::StandardForm;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBound = BarrierSolver::kBarrierBound;
constexpr double kPathFactor = 20.0;
constexpr int kMaxNewtonPerCenter = 80;
constexpr double kArmijo = 0.01;

struct PathResult {
  SolveStatus status = SolveStatus::kNumericalError;
  Eigen::VectorXd x;
  int newton_steps = 0;
};

double LorentzQ(const Eigen::Ref<const Eigen::VectorXd>& u) {
  const double tail = u.tail(u.size() - 1).norm();
  return (u(0) - tail) * (u(0) + tail);
}

// Barrier value of the slack s and the box; +inf outside the domain.
double BarrierValue(const ConeDims& dims, const Eigen::VectorXd& s,
                    const Eigen::VectorXd& x) {
  double value = 0.0;
  for (int i = 0; i < dims.lp; ++i) {
    if (s(i) <= 0.0) return kInf;
    value -= std::log(s(i));
  }
  for (size_t b = 0; b < dims.soc.size(); ++b) {
    const auto block = s.segment(dims.soc_offset(b), dims.soc[b]);
    const double q = LorentzQ(block);
    if (block(0) <= 0.0 || q <= 0.0) return kInf;
    value -= std::log(q);
  }
  for (int j = 0; j < x.size(); ++j) {
    const double upper = kBound - x(j);
    const double lower = kBound + x(j);
    if (upper <= 0.0 || lower <= 0.0) return kInf;
    value -= std::log(upper) + std::log(lower);
  }
  return value;
}

class BarrierPath {
 public:
  BarrierPath(const StandardForm& form, const SolverSettings& settings)
      : form_(form), settings_(settings), kkt_(form) {}

  // Follows the central path from the strictly feasible x0. With
  // `stop_when_negative`, returns as soon as c'x < 0 (phase I).
  PathResult Run(const Eigen::VectorXd& x0, bool stop_when_negative) {
    const ConeDims& dims = form_.dims;
    const int n = form_.n();
    const double nu = dims.lp + 2.0 * dims.soc.size() + 2.0 * n;
    PathResult result;
    Eigen::VectorXd x = x0;
    double t = 1.0;
    const int max_outer = std::max(1, settings_.max_iter);
    for (int outer = 0; outer < max_outer; ++outer) {
      if (!Center(x, t, result.newton_steps, stop_when_negative)) {
        result.x = x;
        return result;
      }
      if (stop_when_negative && form_.c.dot(x) < 0.0) {
        result.status = SolveStatus::kOptimal;
        result.x = x;
        return result;
      }
      const double objective = form_.c.dot(x);
      if (objective < -1e12) {
        result.status = SolveStatus::kUnbounded;
        result.x = x;
        return result;
      }
      const double gap_target =
          std::max(settings_.abs_tol, settings_.rel_tol * std::abs(objective));
      if (nu / t <= gap_target) {
        result.status = x.lpNorm<Eigen::Infinity>() > 0.99 * kBound
                            ? SolveStatus::kUnbounded
                            : SolveStatus::kOptimal;
        if (stop_when_negative) result.status = SolveStatus::kInfeasible;
        result.x = x;
        return result;
      }
      t *= kPathFactor;
    }
    result.status = SolveStatus::kIterationLimit;
    result.x = x;
    return result;
  }

 private:
  // Damped Newton minimization of t c'x + phi(x) on {Ax = b}. Returns false
  // on numerical failure.
  bool Center(Eigen::VectorXd& x, double t, int& steps,
              bool stop_when_negative) {
    const ConeDims& dims = form_.dims;
    const int n = form_.n();
    for (int it = 0; it < kMaxNewtonPerCenter; ++it) {
      const Eigen::VectorXd s = form_.h - form_.G * x;
      Eigen::VectorXd grad_s(s.size());
      // Hessian of the barrier in factored form M'M.
      ConeScaling weights;
      weights.lp = s.head(dims.lp).cwiseInverse();
      grad_s.head(dims.lp) = s.head(dims.lp).cwiseInverse();
      for (size_t b = 0; b < dims.soc.size(); ++b) {
        const int o = dims.soc_offset(b);
        const int d = dims.soc[b];
        const auto block = s.segment(o, d);
        const double q = LorentzQ(block);
        Eigen::VectorXd js = -block;
        js(0) = block(0);
        grad_s.segment(o, d) = 2.0 * js / q;
        // Hessian 2/q (2 v v' - J) with v = Js / sqrt(q); its symmetric
        // square root is sqrt(2/q) times the hyperbolic matrix of v.
        const Eigen::VectorXd v = js / std::sqrt(q);
        const auto v1 = v.tail(d - 1);
        Eigen::MatrixXd root(d, d);
        root(0, 0) = v(0);
        root.block(0, 1, 1, d - 1) = v1.transpose();
        root.block(1, 0, d - 1, 1) = v1;
        root.block(1, 1, d - 1, d - 1) =
            Eigen::MatrixXd::Identity(d - 1, d - 1) +
            v1 * v1.transpose() / (1.0 + v(0));
        if (!root.allFinite()) return false;
        weights.soc.push_back(std::sqrt(2.0 / q) * root);
      }
      const Eigen::ArrayXd upper = kBound - x.array();
      const Eigen::ArrayXd lower = kBound + x.array();
      const Eigen::VectorXd box_grad =
          (upper.inverse() - lower.inverse()).matrix();
      const Eigen::VectorXd box_hess =
          (upper.inverse().square() + lower.inverse().square()).matrix();
      const Eigen::VectorXd grad =
          t * form_.c + form_.G.transpose() * grad_s + box_grad;
      if (!kkt_.Factor(weights, &box_hess)) return false;
      Eigen::VectorXd dx, dy;
      kkt_.SolveReduced(-grad, form_.b - form_.A * x, dx, dy);
      if (!dx.allFinite()) return false;
      const double decrement = -grad.dot(dx);
      if (decrement <= 2e-10 ||
          dx.lpNorm<Eigen::Infinity>() <=
              1e-15 * std::max(1.0, x.lpNorm<Eigen::Infinity>())) {
        return true;
      }
      const Eigen::VectorXd ds = -(form_.G * dx);
      double alpha_max = internal::MaxStepToBoundary(dims, s, ds);
      for (int j = 0; j < n; ++j) {
        if (dx(j) > 0.0) alpha_max = std::min(alpha_max, upper(j) / dx(j));
        if (dx(j) < 0.0) alpha_max = std::min(alpha_max, -lower(j) / dx(j));
      }
      double alpha = std::min(1.0, 0.99 * alpha_max);
      const double f0 = t * form_.c.dot(x) + BarrierValue(dims, s, x);
      const double slope = grad.dot(dx);
      while (alpha > 1e-16) {
        const Eigen::VectorXd trial = x + alpha * dx;
        const double f1 = t * form_.c.dot(trial) +
                          BarrierValue(dims, form_.h - form_.G * trial, trial);
        if (f1 <= f0 + kArmijo * alpha * slope) break;
        alpha *= 0.5;
      }
      if (alpha <= 1e-16) return true;  // no further progress at this t
      x += alpha * dx;
      ++steps;
      if (settings_.verbose) {
        std::fprintf(stderr, "barrier t %.3e obj %+.10e dec %.3e step %.3f\n",
                     t, form_.c.dot(x), decrement, alpha);
      }
      if (stop_when_negative && form_.c.dot(x) < 0.0) return true;
    }
    return true;
  }

  const StandardForm& form_;
  const SolverSettings& settings_;
  internal::ReducedKkt kkt_;
};

// Phase-I program in the variables (x, sigma): minimize sigma subject to
// s(x) + sigma e in K and sigma >= -1.
StandardForm PhaseOneForm(const StandardForm& form) {
  StandardForm phase;
  const int n = form.n();
  const ConeDims& dims = form.dims;
  phase.num_original_vars = n + 1;
  for (int j = 0; j <= n; ++j) phase.kept.push_back(j);
  phase.c = Eigen::VectorXd::Zero(n + 1);
  phase.c(n) = 1.0;
  phase.dims = dims;
  phase.dims.lp = dims.lp + 1;

  std::vector<Eigen::Triplet<double>> triplets;
  auto copy_row = [&](int from, int to) {
    for (internal::SparseMatrix::InnerIterator it(form.G, from); it; ++it) {
      triplets.emplace_back(to, it.col(), it.value());
    }
  };
  phase.h = Eigen::VectorXd::Zero(phase.dims.total());
  for (int i = 0; i < dims.lp; ++i) {
    copy_row(i, i);
    triplets.emplace_back(i, n, -1.0);
    phase.h(i) = form.h(i);
  }
  triplets.emplace_back(dims.lp, n, -1.0);
  phase.h(dims.lp) = 1.0;
  for (int r = dims.lp; r < dims.total(); ++r) copy_row(r, r + 1);
  phase.h.tail(dims.total() - dims.lp) = form.h.tail(dims.total() - dims.lp);
  for (size_t b = 0; b < dims.soc.size(); ++b) {
    triplets.emplace_back(phase.dims.soc_offset(b), n, -1.0);
  }
  phase.G.resize(phase.dims.total(), n + 1);
  phase.G.setFromTriplets(triplets.begin(), triplets.end());

  std::vector<Eigen::Triplet<double>> a_triplets;
  for (int r = 0; r < form.A.rows(); ++r) {
    for (internal::SparseMatrix::InnerIterator it(form.A, r); it; ++it) {
      a_triplets.emplace_back(r, it.col(), it.value());
    }
  }
  phase.A.resize(form.A.rows(), n + 1);
  phase.A.setFromTriplets(a_triplets.begin(), a_triplets.end());
  phase.b = form.b;
  return phase;
}

}  // namespace

bool BarrierSolver::Supports(const ConicProgram& program) const {
  for (const ConeConstraint& row : program.rows) {
    if (row.kind == ConeKind::kPsd) return false;
  }
  return true;
}

absl::StatusOr<Solution> BarrierSolver::Solve(
    const ConicProgram& program, const SolverSettings& settings) const {
  Solution solution;
  solution.solver_name = "barrier";
  const StandardForm form = internal::ToStandardForm(program);
  auto finish = [&](SolveStatus status, const Eigen::VectorXd& reduced) {
    solution.status = status;
    solution.values = form.Expand(reduced);
    solution.objective_value = program.objective.Evaluate(solution.values);
    return solution;
  };
  if (form.free_cost_column) {
    return finish(SolveStatus::kUnbounded, Eigen::VectorXd::Zero(form.n()));
  }
  if (form.n() == 0) {
    return finish(
        MaxViolation(program, Eigen::VectorXd::Zero(program.num_vars)) <=
                settings.abs_tol
            ? SolveStatus::kOptimal
            : SolveStatus::kInfeasible,
        Eigen::VectorXd::Zero(0));
  }

  const int n = form.n();
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(n);
  if (form.A.rows() > 0) {
    const Eigen::MatrixXd dense_a = form.A;
    x0 = dense_a.completeOrthogonalDecomposition().solve(form.b);
    const double eq_residual = (dense_a * x0 - form.b).norm();
    if (eq_residual > 1e-8 * std::max(1.0, form.b.norm())) {
      return finish(SolveStatus::kInfeasible, x0);
    }
  }
  if (x0.lpNorm<Eigen::Infinity>() >= kBarrierBound) {
    return finish(SolveStatus::kNumericalError, x0);
  }

  const Eigen::VectorXd s0 = form.h - form.G * x0;
  const double min_eig =
      form.dims.total() > 0 ? internal::MinEigenvalue(form.dims, s0) : kInf;
  int newton_steps = 0;
  if (!(min_eig > 1e-8)) {
    const StandardForm phase = PhaseOneForm(form);
    Eigen::VectorXd start(n + 1);
    start << x0, 1.0 + std::max(0.0, -min_eig);
    BarrierPath phase_path(phase, settings);
    const PathResult phase_result = phase_path.Run(start, true);
    newton_steps += phase_result.newton_steps;
    if (phase_result.status != SolveStatus::kOptimal) {
      solution.iterations = newton_steps;
      return finish(phase_result.status == SolveStatus::kInfeasible
                        ? SolveStatus::kInfeasible
                        : SolveStatus::kNumericalError,
                    phase_result.x.head(n));
    }
    x0 = phase_result.x.head(n);
  }

  BarrierPath path(form, settings);
  const PathResult result = path.Run(x0, false);
  solution.iterations = newton_steps + result.newton_steps;
  return finish(result.status, result.x);
}

}  // namespace aroqdr
