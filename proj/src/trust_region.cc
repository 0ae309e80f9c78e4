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

#include "aroqdr/trust_region.h"

#include <algorithm>
#include <cmath>

#include "Eigen/Eigenvalues"

namespace aroqdr {
namespace {

constexpr int kMaxSecularIterations = 200;

double Objective(const Eigen::MatrixXd& q, const Eigen::VectorXd& g, double c0,
                 const Eigen::VectorXd& z) {
  return z.dot(q * z) + g.dot(z) + c0;
}

// |z(mu)| for z_i = h_i / (mu - e_i) in the eigenbasis.
double StepNorm(const Eigen::VectorXd& e, const Eigen::VectorXd& h, double mu) {
  return (h.array() / (mu - e.array())).matrix().norm();
}

}  // namespace

TrustRegionResult WorstCaseQuadratic(const Eigen::MatrixXd& Qm,
                                     const Eigen::VectorXd& g, double c0,
                                     double radius) {
  const int l = static_cast<int>(g.size());
  const Eigen::MatrixXd q = 0.5 * (Qm + Qm.transpose());
  TrustRegionResult result;
  if (l == 0) {
    result.value = c0;
    result.argmax = Eigen::VectorXd::Zero(0);
    return result;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(q);
  // Eigen sorts ascending; the top eigenvalue drives the maximization.
  const Eigen::VectorXd e = eig.eigenvalues();
  const Eigen::MatrixXd& v = eig.eigenvectors();
  const Eigen::VectorXd h = 0.5 * (v.transpose() * g);
  const double e_top = e(l - 1);
  const double scale = e.cwiseAbs().maxCoeff() + g.norm() + 1e-300;

  // Stationary points satisfy (mu I - q) z = g / 2 with mu >= max(0, e_top).
  if (e_top < 0.0) {
    const double interior = StepNorm(e, h, 0.0);
    if (interior <= radius) {
      result.argmax = v * (h.array() / (-e.array())).matrix();
      result.value = Objective(q, g, c0, result.argmax);
      return result;
    }
  }

  const double lower = std::max(0.0, e_top);
  const double top_tol = 1e-12 * scale;
  Eigen::VectorXd top_mask = Eigen::VectorXd::Zero(l);
  for (int i = 0; i < l; ++i) top_mask(i) = e_top - e(i) <= top_tol ? 1.0 : 0.0;
  const double top_weight = (h.array() * top_mask.array()).matrix().norm();

  if (top_weight <= 1e-13 * scale && e_top >= 0.0) {
    // The remaining components stay bounded as mu approaches e_top.
    Eigen::VectorXd rest = Eigen::VectorXd::Zero(l);
    for (int i = 0; i < l; ++i) {
      if (top_mask(i) == 0.0) rest(i) = h(i) / (e_top - e(i));
    }
    if (rest.norm() <= radius) {
      const double fill =
          std::sqrt(std::max(0.0, radius * radius - rest.squaredNorm()));
      rest(l - 1) = fill;
      result.argmax = v * rest;
      result.multiplier = e_top;
      result.hard_case = true;
      result.value = Objective(q, g, c0, result.argmax);
      return result;
    }
  }

  // Secular equation 1/|z(mu)| = 1/radius, increasing and nearly linear in
  // mu. Newton steps are kept inside a shrinking bracket.
  double lo = lower;
  double hi = lower + 2.0 * h.norm() / radius + 1e-300;
  while (StepNorm(e, h, hi) > radius) hi = lower + 2.0 * (hi - lower);
  double mu = hi;
  for (int it = 0; it < kMaxSecularIterations; ++it) {
    const Eigen::ArrayXd denom = mu - e.array();
    const Eigen::ArrayXd zc = h.array() / denom;
    const double norm = zc.matrix().norm();
    if (norm > radius) {
      lo = mu;
    } else {
      hi = mu;
    }
    const double phi = 1.0 / norm - 1.0 / radius;
    // d|z|/dmu = -sum z_i^2 / (mu - e_i) / |z|.
    const double dnorm = -(zc.square() / denom).sum() / norm;
    const double dphi = -dnorm / (norm * norm);
    double next = mu - phi / dphi;
    if (!(next > lo && next < hi) || !std::isfinite(next)) {
      next = 0.5 * (lo + hi);
    }
    if (std::abs(next - mu) <= 1e-15 * std::max(1.0, std::abs(mu)) ||
        hi - lo <= 1e-15 * std::max(1.0, std::abs(hi))) {
      mu = next;
      break;
    }
    mu = next;
  }
  Eigen::VectorXd z = v * (h.array() / (mu - e.array())).matrix();
  const double norm = z.norm();
  if (norm > 0.0) z *= radius / norm;
  result.argmax = z;
  result.multiplier = mu;
  result.value = Objective(q, g, c0, z);
  return result;
}

}  // namespace aroqdr
