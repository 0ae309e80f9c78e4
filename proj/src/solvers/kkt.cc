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

#include "solvers/kkt.h"

#include <algorithm>
#include <cmath>

namespace aroqdr::internal {
namespace {

constexpr int kRefinementSteps = 10;
constexpr int kRegularizationAttempts = 7;
constexpr double kMinUnregularizedRcond = 1e-15;

}  // namespace

ReducedKkt::ReducedKkt(const StandardForm& form) : form_(form) {
  gt_ = form.G.transpose();
  at_ = form.A.transpose();
  auto make_block = [&](int offset, int dim) {
    Block block;
    for (int r = offset; r < offset + dim; ++r) {
      for (SparseMatrix::InnerIterator it(form.G, r); it; ++it) {
        block.cols.push_back(static_cast<int>(it.col()));
      }
    }
    std::sort(block.cols.begin(), block.cols.end());
    block.cols.erase(std::unique(block.cols.begin(), block.cols.end()),
                     block.cols.end());
    block.g = Eigen::MatrixXd::Zero(dim, block.cols.size());
    for (int r = offset; r < offset + dim; ++r) {
      for (SparseMatrix::InnerIterator it(form.G, r); it; ++it) {
        const int local = static_cast<int>(
            std::lower_bound(block.cols.begin(), block.cols.end(), it.col()) -
            block.cols.begin());
        block.g(r - offset, local) = it.value();
      }
    }
    return block;
  };
  const ConeDims& dims = form.dims;
  for (size_t b = 0; b < dims.soc.size(); ++b) {
    soc_blocks_.push_back(make_block(dims.soc_offset(b), dims.soc[b]));
  }
  for (size_t b = 0; b < dims.psd.size(); ++b) {
    psd_blocks_.push_back(
        make_block(dims.psd_offset(b), PackedTriangleSize(dims.psd[b])));
  }
}

bool ReducedKkt::Factor(const ConeScaling& scaling,
                        const Eigen::VectorXd* extra_diagonal) {
  scaling_ = &scaling;
  const int n = form_.n();
  const int p = static_cast<int>(form_.A.rows());
  h_ = Eigen::MatrixXd::Zero(n, n);

  const ConeDims& dims = form_.dims;
  for (int r = 0; r < dims.lp; ++r) {
    const double w = scaling.lp(r) * scaling.lp(r);
    for (SparseMatrix::InnerIterator a(form_.G, r); a; ++a) {
      for (SparseMatrix::InnerIterator b(form_.G, r); b; ++b) {
        h_(a.col(), b.col()) += w * a.value() * b.value();
      }
    }
  }
  auto scatter = [&](const Block& block, const Eigen::MatrixXd& local) {
    for (size_t i = 0; i < block.cols.size(); ++i) {
      for (size_t j = 0; j < block.cols.size(); ++j) {
        h_(block.cols[i], block.cols[j]) += local(i, j);
      }
    }
  };
  for (size_t b = 0; b < soc_blocks_.size(); ++b) {
    const Block& block = soc_blocks_[b];
    const Eigen::MatrixXd scaled = scaling.soc[b] * block.g;
    scatter(block, scaled.transpose() * scaled);
  }
  for (size_t b = 0; b < psd_blocks_.size(); ++b) {
    const Block& block = psd_blocks_[b];
    const int side = dims.psd[b];
    const Eigen::MatrixXd& p = scaling.psd_p[b];
    Eigen::MatrixXd scaled(block.g.rows(), block.g.cols());
    for (int c = 0; c < block.g.cols(); ++c) {
      scaled.col(c) = Svec(p * Smat(block.g.col(c), side) * p.transpose());
    }
    scatter(block, scaled.transpose() * scaled);
  }
  h_ = 0.5 * (h_ + h_.transpose()).eval();
  if (extra_diagonal != nullptr) h_.diagonal() += *extra_diagonal;

  const double scale = n > 0 ? std::max(1.0, h_.diagonal().maxCoeff()) : 1.0;
  use_lu_ = p > 0;
  // The first attempt is unregularized; later ones add a growing shift.
  reg_ = 0.0;
  for (int attempt = 0; attempt < kRegularizationAttempts; ++attempt) {
    if (attempt == 1) reg_ = 1e-14 * scale;
    const double min_rcond = attempt == 0 ? kMinUnregularizedRcond : 0.0;
    if (!use_lu_) {
      llt_.compute(h_ + reg_ * Eigen::MatrixXd::Identity(n, n));
      if (llt_.info() == Eigen::Success && llt_.rcond() > min_rcond) {
        return true;
      }
    } else {
      Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n + p, n + p);
      k.topLeftCorner(n, n) = h_ + reg_ * Eigen::MatrixXd::Identity(n, n);
      k.topRightCorner(n, p) = at_;
      k.bottomLeftCorner(p, n) = form_.A;
      k.bottomRightCorner(p, p) = -reg_ * Eigen::MatrixXd::Identity(p, p);
      lu_.compute(k);
      const double rcond = lu_.rcond();
      if (std::isfinite(rcond) && rcond > std::max(min_rcond, 1e-300)) {
        return true;
      }
    }
    if (attempt > 0) reg_ *= 100.0;
  }
  return false;
}

void ReducedKkt::SolveReduced(const Eigen::VectorXd& r1,
                              const Eigen::VectorXd& r2, Eigen::VectorXd& dx,
                              Eigen::VectorXd& dy) const {
  const int n = form_.n();
  const int p = static_cast<int>(form_.A.rows());
  auto regularized_solve = [&](const Eigen::VectorXd& a,
                               const Eigen::VectorXd& b, Eigen::VectorXd& x,
                               Eigen::VectorXd& y) {
    if (!use_lu_) {
      x = llt_.solve(a);
      y = Eigen::VectorXd::Zero(p);
      return;
    }
    Eigen::VectorXd rhs(n + p);
    rhs << a, b;
    const Eigen::VectorXd sol = lu_.solve(rhs);
    x = sol.head(n);
    y = sol.tail(p);
  };
  regularized_solve(r1, r2, dx, dy);
  for (int step = 0; step < kRefinementSteps; ++step) {
    const Eigen::VectorXd e1 = r1 - h_ * dx - at_ * dy;
    const Eigen::VectorXd e2 = r2 - form_.A * dx;
    const double err = std::max(e1.lpNorm<Eigen::Infinity>(),
                                p > 0 ? e2.lpNorm<Eigen::Infinity>() : 0.0);
    const double ref = std::max({1.0, r1.lpNorm<Eigen::Infinity>(),
                                 p > 0 ? r2.lpNorm<Eigen::Infinity>() : 0.0});
    if (err <= 1e-15 * ref) break;
    Eigen::VectorXd cx;
    Eigen::VectorXd cy;
    regularized_solve(e1, e2, cx, cy);
    dx += cx;
    dy += cy;
  }
}

void ReducedKkt::Solve(const Eigen::VectorXd& rx, const Eigen::VectorXd& ry,
                       const Eigen::VectorXd& rz, Eigen::VectorXd& dx,
                       Eigen::VectorXd& dy, Eigen::VectorXd& dz_scaled) const {
  SolveScaled(rx, ry, scaling_->Apply(form_.dims, rz), dx, dy, dz_scaled);
}

void ReducedKkt::SolveScaled(const Eigen::VectorXd& rx,
                             const Eigen::VectorXd& ry,
                             const Eigen::VectorXd& rz_scaled,
                             Eigen::VectorXd& dx, Eigen::VectorXd& dy,
                             Eigen::VectorXd& dz_scaled) const {
  const ConeDims& dims = form_.dims;
  auto solve_once = [&](const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                        const Eigen::VectorXd& c, Eigen::VectorXd& x,
                        Eigen::VectorXd& y, Eigen::VectorXd& u) {
    SolveReduced(a + gt_ * scaling_->ApplyT(dims, c), b, x, y);
    u = scaling_->Apply(dims, form_.G * x) - c;
  };
  solve_once(rx, ry, rz_scaled, dx, dy, dz_scaled);
  const double ref =
      std::max({1.0, rx.lpNorm<Eigen::Infinity>(),
                ry.size() > 0 ? ry.lpNorm<Eigen::Infinity>() : 0.0,
                rz_scaled.lpNorm<Eigen::Infinity>()});
  for (int step = 0; step < kRefinementSteps; ++step) {
    const Eigen::VectorXd e1 =
        rx - gt_ * scaling_->ApplyT(dims, dz_scaled) - at_ * dy;
    const Eigen::VectorXd e2 = ry - form_.A * dx;
    const Eigen::VectorXd e3 =
        rz_scaled - scaling_->Apply(dims, form_.G * dx) + dz_scaled;
    double err =
        std::max(e1.lpNorm<Eigen::Infinity>(), e3.lpNorm<Eigen::Infinity>());
    if (e2.size() > 0) err = std::max(err, e2.lpNorm<Eigen::Infinity>());
    if (err <= 1e-14 * ref) break;
    Eigen::VectorXd cx, cy, cu;
    solve_once(e1, e2, e3, cx, cy, cu);
    dx += cx;
    dy += cy;
    dz_scaled += cu;
  }
}

}  // namespace aroqdr::internal
