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

#include "solvers/interior_point.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "solvers/cones.h"
#include "solvers/kkt.h"

namespace aroqdr {
namespace {

using internal::ConeDims;
using internal::NtScaling;
using internal::ReducedKkt;
using internal::StandardForm;

constexpr double kStepFraction = 0.99;
// When the iteration breaks down, the best iterate still counts as optimal
// if it is primal feasible to tolerance and its dual residual and gap are
// within this factor of the tolerances.
constexpr double kReducedAccuracyFactor = 100.0;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Evaluates a program with no live variables: either every row holds at the
// origin or the program is infeasible.
Solution SolveConstant(const ConicProgram& program,
                       const SolverSettings& settings) {
  Solution solution;
  solution.solver_name = "ipm";
  solution.values = Eigen::VectorXd::Zero(program.num_vars);
  solution.objective_value = program.objective.Evaluate(solution.values);
  solution.status = MaxViolation(program, solution.values) <= settings.abs_tol
                        ? SolveStatus::kOptimal
                        : SolveStatus::kInfeasible;
  return solution;
}

// max t with u + t e outside the interior, i.e. -lambda_min(u).
double InteriorShift(const ConeDims& dims, const Eigen::VectorXd& u) {
  if (dims.total() == 0) return -kInf;
  return -internal::MinEigenvalue(dims, u);
}

}  // namespace

absl::StatusOr<Solution> InteriorPointSolver::Solve(
    const ConicProgram& program, const SolverSettings& settings) const {
  StandardForm form = internal::ToStandardForm(program);
  const internal::Equilibration equilibration = internal::Equilibrate(form);
  Solution solution;
  solution.solver_name = "ipm";
  if (form.free_cost_column) {
    solution.status = SolveStatus::kUnbounded;
    solution.values = Eigen::VectorXd::Zero(program.num_vars);
    return solution;
  }
  if (form.n() == 0) return SolveConstant(program, settings);

  const ConeDims& dims = form.dims;
  const int m = dims.total();
  const Eigen::VectorXd& c = form.c;
  const Eigen::VectorXd& h = form.h;
  const Eigen::VectorXd& b = form.b;
  const internal::SparseMatrix& G = form.G;
  const internal::SparseMatrix& A = form.A;
  const internal::SparseMatrix gt = G.transpose();
  const internal::SparseMatrix at = A.transpose();
  const Eigen::VectorXd e = internal::Identity(dims);
  const double degree = dims.degree();

  ReducedKkt kkt(form);
  NtScaling scaling;

  // Starting point from two least-squares problems with W = I.
  if (!scaling.Compute(dims, e, e) ||
      !kkt.Factor(scaling.inverse_transpose())) {
    solution.status = SolveStatus::kNumericalError;
    return solution;
  }
  Eigen::VectorXd x, y, z, s, tmp_y, tmp_z;
  kkt.Solve(Eigen::VectorXd::Zero(form.n()), b, h, x, tmp_y, tmp_z);
  s = -tmp_z;
  Eigen::VectorXd tmp_x;
  kkt.Solve(-c, Eigen::VectorXd::Zero(b.size()), Eigen::VectorXd::Zero(m),
            tmp_x, y, z);
  const double shift_s = InteriorShift(dims, s);
  if (shift_s >= -1e-8 * std::max(1.0, s.norm())) s += (1.0 + shift_s) * e;
  const double shift_z = InteriorShift(dims, z);
  if (shift_z >= -1e-8 * std::max(1.0, z.norm())) z += (1.0 + shift_z) * e;
  double tau = 1.0;
  double kappa = 1.0;

  const double resx0 = std::max(1.0, c.norm());
  const double resy0 = std::max(1.0, b.norm());
  const double resz0 = std::max(1.0, h.norm());

  // Best iterate so far, by the worst ratio of a residual to its tolerance.
  Eigen::VectorXd best_x;
  double best_score = kInf;
  double best_pres = kInf;
  double best_dres = kInf;
  double best_gap = kInf;

  auto finish = [&](SolveStatus status, const Eigen::VectorXd& reduced) {
    if ((status == SolveStatus::kNumericalError ||
         status == SolveStatus::kIterationLimit) &&
        best_score <= kReducedAccuracyFactor) {
      solution.status = SolveStatus::kOptimal;
      solution.primal_residual = best_pres;
      solution.dual_residual = best_dres;
      solution.gap = best_gap;
      solution.values = form.Expand(equilibration.col.cwiseProduct(best_x));
      solution.objective_value = program.objective.Evaluate(solution.values);
      return solution;
    }
    solution.status = status;
    solution.values = form.Expand(equilibration.col.cwiseProduct(reduced));
    solution.objective_value = program.objective.Evaluate(solution.values);
    return solution;
  };

  for (int iter = 0; iter <= settings.max_iter; ++iter) {
    solution.iterations = iter;
    const Eigen::VectorXd hrx = -(at * y + gt * z);
    const Eigen::VectorXd hry = A * x;
    const Eigen::VectorXd hrz = s + G * x;
    const Eigen::VectorXd rx = -hrx + c * tau;
    const Eigen::VectorXd ry = -hry + b * tau;
    const Eigen::VectorXd rz = hrz - h * tau;
    const double cx = c.dot(x);
    const double by = b.dot(y);
    const double hz = h.dot(z);
    const double rt = kappa + cx + by + hz;

    const double pcost = cx / tau;
    const double dcost = -(by + hz) / tau;
    const double gap = s.dot(z) / (tau * tau);
    double relgap = kInf;
    if (pcost < 0.0) {
      relgap = gap / -pcost;
    } else if (dcost > 0.0) {
      relgap = gap / dcost;
    }
    const double pres = std::max(ry.norm() / resy0, rz.norm() / resz0) / tau;
    const double dres = rx.norm() / resx0 / tau;
    solution.primal_residual = pres;
    solution.dual_residual = dres;
    solution.gap = gap;
    if (settings.verbose) {
      std::fprintf(stderr,
                   "ipm %3d pcost %+.9e dcost %+.9e gap %.2e pres %.2e dres "
                   "%.2e tau %.2e kappa %.2e\n",
                   iter, pcost, dcost, gap, pres, dres, tau, kappa);
    }

    const double feastol = settings.abs_tol;
    // Primal infeasibility is weighted so that only primal feasible
    // iterates can reach the acceptance threshold.
    const double score =
        std::max({kReducedAccuracyFactor * pres / feastol, dres / feastol,
                  std::min(gap / settings.abs_tol, relgap / settings.rel_tol)});
    if (score < best_score && tau > 0.0) {
      best_score = score;
      best_x = x / tau;
      best_pres = pres;
      best_dres = dres;
      best_gap = gap;
    }
    if (pres <= feastol && dres <= feastol &&
        (gap <= settings.abs_tol || relgap <= settings.rel_tol)) {
      return finish(SolveStatus::kOptimal, x / tau);
    }
    if (hz + by < 0.0 && hrx.norm() / resx0 / -(hz + by) <= feastol) {
      return finish(SolveStatus::kInfeasible, x / tau);
    }
    if (cx < 0.0 &&
        std::max(hry.norm() / resy0, hrz.norm() / resz0) / -cx <= feastol) {
      return finish(SolveStatus::kUnbounded, x / tau);
    }
    if (iter == settings.max_iter) break;

    if (!scaling.Compute(dims, s, z) ||
        !kkt.Factor(scaling.inverse_transpose())) {
      return finish(SolveStatus::kNumericalError, x / tau);
    }
    const Eigen::VectorXd& lambda = scaling.lambda();
    const double mu = (s.dot(z) + tau * kappa) / (degree + 1.0);

    // Directions are carried with z scaled by W; h is pulled back once.
    const Eigen::VectorXd h_scaled = scaling.ApplyWInvT(h);
    Eigen::VectorXd dx1, dy1, dz1_scaled;
    kkt.SolveScaled(-c, b, h_scaled, dx1, dy1, dz1_scaled);
    const double denom = -kappa / tau - dz1_scaled.squaredNorm();

    const Eigen::VectorXd lambda_sq =
        internal::JordanProduct(dims, lambda, lambda);
    Eigen::VectorXd ds_aff_scaled, dz_aff_scaled;
    double dtau_aff = 0.0;
    double dkappa_aff = 0.0;
    double sigma = 0.0;

    Eigen::VectorXd dx, dy, dz, ds, dz_scaled, ds_scaled;
    double dtau = 0.0;
    double dkappa = 0.0;
    double alpha = 0.0;
    for (int pass = 0; pass < 2; ++pass) {
      const double eta = pass == 0 ? 1.0 : 1.0 - sigma;
      Eigen::VectorXd d_s = -lambda_sq;
      double d_kappa = -tau * kappa;
      if (pass == 1) {
        d_s += -internal::JordanProduct(dims, ds_aff_scaled, dz_aff_scaled) +
               sigma * mu * e;
        d_kappa += -dtau_aff * dkappa_aff + sigma * mu;
      }
      const Eigen::VectorXd lds = scaling.LambdaDivide(d_s);
      Eigen::VectorXd dx2, dy2, dz2_scaled;
      kkt.SolveScaled(-eta * rx, eta * ry, -eta * scaling.ApplyWInvT(rz) - lds,
                      dx2, dy2, dz2_scaled);
      const double num = -eta * rt - d_kappa / tau -
                         (c.dot(dx2) + b.dot(dy2) + h_scaled.dot(dz2_scaled));
      dtau = num / denom;
      dx = dx2 + dtau * dx1;
      dy = dy2 + dtau * dy1;
      dz_scaled = dz2_scaled + dtau * dz1_scaled;
      ds_scaled = lds - dz_scaled;
      dkappa = (d_kappa - kappa * dtau) / tau;

      double max_step =
          std::min(scaling.MaxStep(ds_scaled), scaling.MaxStep(dz_scaled));
      if (dtau < 0.0) max_step = std::min(max_step, -tau / dtau);
      if (dkappa < 0.0) max_step = std::min(max_step, -kappa / dkappa);
      if (pass == 0) {
        const double alpha_aff = std::min(1.0, max_step);
        sigma = std::pow(1.0 - alpha_aff, 3);
        ds_aff_scaled = ds_scaled;
        dz_aff_scaled = dz_scaled;
        dtau_aff = dtau;
        dkappa_aff = dkappa;
      } else {
        alpha = std::min(1.0, kStepFraction * max_step);
      }
    }
    if (!std::isfinite(alpha) || !std::isfinite(dtau) || !dx.allFinite()) {
      return finish(SolveStatus::kNumericalError, x / tau);
    }
    ds = scaling.ApplyWT(ds_scaled);
    dz = scaling.ApplyWInv(dz_scaled);
    x += alpha * dx;
    y += alpha * dy;
    z += alpha * dz;
    s += alpha * ds;
    tau += alpha * dtau;
    kappa += alpha * dkappa;
  }
  return finish(SolveStatus::kIterationLimit, x / tau);
}

}  // namespace aroqdr
