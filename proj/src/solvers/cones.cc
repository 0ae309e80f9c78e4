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

#include "solvers/cones.h"

#include <cmath>
#include <limits>

#include "Eigen/Cholesky"
#include "Eigen/Eigenvalues"
#include "Eigen/SVD"

namespace aroqdr::internal {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kSqrt2 = std::sqrt(2.0);

// Square of the Lorentz norm u0^2 - |u1|^2, computed as a product to limit
// cancellation. Negative when u is outside the cone.
double LorentzSquare(const Eigen::Ref<const Eigen::VectorXd>& u) {
  const double tail = u.tail(u.size() - 1).norm();
  return (u(0) - tail) * (u(0) + tail);
}

// Applies [w0, s w1'; s w1, I + w1 w1' / (1 + w0)] to u, with sign s = +1 for
// the scaling and s = -1 for its inverse.
Eigen::VectorXd ApplyHyperbolic(const Eigen::VectorXd& w,
                                const Eigen::Ref<const Eigen::VectorXd>& u,
                                double sign) {
  const int d = static_cast<int>(w.size());
  const double w0 = w(0);
  const auto w1 = w.tail(d - 1);
  const auto u1 = u.tail(d - 1);
  const double w1u1 = w1.dot(u1);
  Eigen::VectorXd out(d);
  out(0) = w0 * u(0) + sign * w1u1;
  out.tail(d - 1) = u1 + w1 * (sign * u(0) + w1u1 / (1.0 + w0));
  return out;
}

Eigen::MatrixXd HyperbolicMatrix(const Eigen::VectorXd& w, double sign) {
  const int d = static_cast<int>(w.size());
  Eigen::MatrixXd m(d, d);
  const auto w1 = w.tail(d - 1);
  m(0, 0) = w(0);
  m.block(0, 1, 1, d - 1) = sign * w1.transpose();
  m.block(1, 0, d - 1, 1) = sign * w1;
  m.block(1, 1, d - 1, d - 1) = Eigen::MatrixXd::Identity(d - 1, d - 1) +
                                w1 * w1.transpose() / (1.0 + w(0));
  return m;
}

// Largest alpha with u + alpha v in the second-order cone, for u interior.
// Maps u to e by a hyperbolic rotation so the test reduces to
// 1 + alpha rho0 >= alpha |rho1|.
double SocMaxStep(const Eigen::Ref<const Eigen::VectorXd>& u,
                  const Eigen::Ref<const Eigen::VectorXd>& v) {
  const int d = static_cast<int>(u.size());
  const double norm = std::sqrt(LorentzSquare(u));
  const Eigen::VectorXd x = u / norm;
  const Eigen::VectorXd w = v / norm;
  const auto x1 = x.tail(d - 1);
  const auto w1 = w.tail(d - 1);
  const double x1w1 = x1.dot(w1);
  const double rho0 = x(0) * w(0) - x1w1;
  const Eigen::VectorXd rho1 = w1 - x1 * w(0) + x1 * (x1w1 / (1.0 + x(0)));
  const double denom = rho1.norm() - rho0;
  return denom > 0.0 ? 1.0 / denom : kInf;
}

}  // namespace

int ConeDims::total() const {
  int sum = lp;
  for (int d : soc) sum += d;
  for (int p : psd) sum += PackedTriangleSize(p);
  return sum;
}

int ConeDims::degree() const {
  int sum = lp + static_cast<int>(soc.size());
  for (int p : psd) sum += p;
  return sum;
}

int ConeDims::soc_offset(int b) const {
  int offset = lp;
  for (int i = 0; i < b; ++i) offset += soc[i];
  return offset;
}

int ConeDims::psd_offset(int b) const {
  int offset = lp;
  for (int d : soc) offset += d;
  for (int i = 0; i < b; ++i) offset += PackedTriangleSize(psd[i]);
  return offset;
}

Eigen::VectorXd StandardForm::Expand(const Eigen::VectorXd& reduced) const {
  Eigen::VectorXd full = Eigen::VectorXd::Zero(num_original_vars);
  for (size_t j = 0; j < kept.size(); ++j) full(kept[j]) = reduced(j);
  return full;
}

StandardForm ToStandardForm(const ConicProgram& program) {
  StandardForm form;
  form.num_original_vars = program.num_vars;

  std::vector<char> used(program.num_vars, 0);
  for (const ConeConstraint& row : program.rows) {
    for (const AffineExpr& expr : row.entries) {
      for (size_t t = 0; t < expr.vars.size(); ++t) {
        if (expr.coefs[t] != 0.0) used[expr.vars[t]] = 1;
      }
    }
  }
  std::vector<double> cost(program.num_vars, 0.0);
  for (size_t t = 0; t < program.objective.vars.size(); ++t) {
    cost[program.objective.vars[t]] += program.objective.coefs[t];
  }
  std::vector<int> reduced_index(program.num_vars, -1);
  for (int v = 0; v < program.num_vars; ++v) {
    if (used[v]) {
      reduced_index[v] = static_cast<int>(form.kept.size());
      form.kept.push_back(v);
    } else if (cost[v] != 0.0) {
      form.free_cost_column = true;
    }
  }
  const int n = static_cast<int>(form.kept.size());
  form.c = Eigen::VectorXd::Zero(n);
  for (int j = 0; j < n; ++j) form.c(j) = cost[form.kept[j]];
  form.c_constant = program.objective.constant;

  // Count rows per cone family to fix the ordering [lp | soc | psd].
  int num_eq = 0;
  for (const ConeConstraint& row : program.rows) {
    switch (row.kind) {
      case ConeKind::kZero:
        num_eq += row.dim();
        break;
      case ConeKind::kNonnegative:
        form.dims.lp += row.dim();
        break;
      case ConeKind::kSecondOrder:
        form.dims.soc.push_back(row.dim());
        break;
      case ConeKind::kPsd:
        form.dims.psd.push_back(row.side);
        break;
    }
  }

  std::vector<Eigen::Triplet<double>> g_triplets;
  std::vector<Eigen::Triplet<double>> a_triplets;
  form.h = Eigen::VectorXd::Zero(form.dims.total());
  form.b = Eigen::VectorXd::Zero(num_eq);

  auto emit = [&](std::vector<Eigen::Triplet<double>>& triplets, int out_row,
                  const AffineExpr& expr, double scale) {
    for (size_t t = 0; t < expr.vars.size(); ++t) {
      const int j = reduced_index[expr.vars[t]];
      if (j >= 0 && expr.coefs[t] != 0.0) {
        triplets.emplace_back(out_row, j, scale * expr.coefs[t]);
      }
    }
  };

  int eq_row = 0;
  int lp_row = 0;
  int soc_block = 0;
  int psd_block = 0;
  for (const ConeConstraint& row : program.rows) {
    switch (row.kind) {
      case ConeKind::kZero:
        for (const AffineExpr& expr : row.entries) {
          emit(a_triplets, eq_row, expr, 1.0);
          form.b(eq_row) = -expr.constant;
          ++eq_row;
        }
        break;
      case ConeKind::kNonnegative:
        for (const AffineExpr& expr : row.entries) {
          emit(g_triplets, lp_row, expr, -1.0);
          form.h(lp_row) = expr.constant;
          ++lp_row;
        }
        break;
      case ConeKind::kSecondOrder: {
        const int offset = form.dims.soc_offset(soc_block++);
        for (int e = 0; e < row.dim(); ++e) {
          emit(g_triplets, offset + e, row.entries[e], -1.0);
          form.h(offset + e) = row.entries[e].constant;
        }
        break;
      }
      case ConeKind::kPsd: {
        const int offset = form.dims.psd_offset(psd_block++);
        for (int i = 0; i < row.side; ++i) {
          for (int j = i; j < row.side; ++j) {
            const int e = PackedIndex(i, j, row.side);
            const double scale = i == j ? 1.0 : kSqrt2;
            emit(g_triplets, offset + e, row.entries[e], -scale);
            form.h(offset + e) = scale * row.entries[e].constant;
          }
        }
        break;
      }
    }
  }

  form.G.resize(form.dims.total(), n);
  form.G.setFromTriplets(g_triplets.begin(), g_triplets.end());
  form.A.resize(num_eq, n);
  form.A.setFromTriplets(a_triplets.begin(), a_triplets.end());
  return form;
}

Equilibration Equilibrate(StandardForm& form, int passes) {
  const int n = form.n();
  const int mg = static_cast<int>(form.G.rows());
  const int ma = static_cast<int>(form.A.rows());
  Equilibration eq{Eigen::VectorXd::Ones(n), Eigen::VectorXd::Ones(mg),
                   Eigen::VectorXd::Ones(ma)};
  // Block id of every G row; orthant rows are their own block.
  std::vector<int> block(mg);
  int num_blocks = 0;
  for (int r = 0; r < form.dims.lp; ++r) block[r] = num_blocks++;
  int row = form.dims.lp;
  for (int d : form.dims.soc) {
    for (int e = 0; e < d; ++e) block[row++] = num_blocks;
    ++num_blocks;
  }
  for (int side : form.dims.psd) {
    for (int e = 0; e < PackedTriangleSize(side); ++e)
      block[row++] = num_blocks;
    ++num_blocks;
  }
  auto inverse_root = [](double v) {
    return v > 0.0 ? 1.0 / std::sqrt(v) : 1.0;
  };

  for (int pass = 0; pass < passes; ++pass) {
    Eigen::VectorXd col_max = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd block_max = Eigen::VectorXd::Zero(num_blocks);
    Eigen::VectorXd a_max = Eigen::VectorXd::Zero(ma);
    for (int r = 0; r < mg; ++r) {
      for (SparseMatrix::InnerIterator it(form.G, r); it; ++it) {
        const double v = std::abs(it.value());
        col_max(it.col()) = std::max(col_max(it.col()), v);
        block_max(block[r]) = std::max(block_max(block[r]), v);
      }
    }
    for (int r = 0; r < ma; ++r) {
      for (SparseMatrix::InnerIterator it(form.A, r); it; ++it) {
        const double v = std::abs(it.value());
        col_max(it.col()) = std::max(col_max(it.col()), v);
        a_max(r) = std::max(a_max(r), v);
      }
    }
    double spread = 0.0;
    for (int j = 0; j < n; ++j) {
      if (col_max(j) > 0.0)
        spread = std::max(spread, std::abs(std::log(col_max(j))));
    }
    for (int b = 0; b < num_blocks; ++b) {
      if (block_max(b) > 0.0)
        spread = std::max(spread, std::abs(std::log(block_max(b))));
    }
    if (spread < 0.1) break;

    Eigen::VectorXd dc(n);
    for (int j = 0; j < n; ++j) dc(j) = inverse_root(col_max(j));
    for (int r = 0; r < mg; ++r) {
      const double dr = inverse_root(block_max(block[r]));
      eq.row_g(r) *= dr;
      form.h(r) *= dr;
      for (SparseMatrix::InnerIterator it(form.G, r); it; ++it) {
        it.valueRef() *= dr * dc(it.col());
      }
    }
    for (int r = 0; r < ma; ++r) {
      const double dr = inverse_root(a_max(r));
      eq.row_a(r) *= dr;
      form.b(r) *= dr;
      for (SparseMatrix::InnerIterator it(form.A, r); it; ++it) {
        it.valueRef() *= dr * dc(it.col());
      }
    }
    eq.col.array() *= dc.array();
    form.c.array() *= dc.array();
  }
  return eq;
}

Eigen::VectorXd Svec(const Eigen::MatrixXd& matrix) {
  const int side = static_cast<int>(matrix.rows());
  Eigen::VectorXd packed(PackedTriangleSize(side));
  int e = 0;
  for (int i = 0; i < side; ++i) {
    packed(e++) = matrix(i, i);
    for (int j = i + 1; j < side; ++j) packed(e++) = kSqrt2 * matrix(i, j);
  }
  return packed;
}

Eigen::MatrixXd Smat(const Eigen::VectorXd& packed, int side) {
  Eigen::MatrixXd matrix(side, side);
  int e = 0;
  for (int i = 0; i < side; ++i) {
    matrix(i, i) = packed(e++);
    for (int j = i + 1; j < side; ++j) {
      matrix(i, j) = matrix(j, i) = packed(e++) / kSqrt2;
    }
  }
  return matrix;
}

Eigen::VectorXd Identity(const ConeDims& dims) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(dims.total());
  e.head(dims.lp).setOnes();
  for (size_t b = 0; b < dims.soc.size(); ++b) e(dims.soc_offset(b)) = 1.0;
  for (size_t b = 0; b < dims.psd.size(); ++b) {
    const int side = dims.psd[b];
    e.segment(dims.psd_offset(b), PackedTriangleSize(side)) =
        Svec(Eigen::MatrixXd::Identity(side, side));
  }
  return e;
}

double MinEigenvalue(const ConeDims& dims, const Eigen::VectorXd& u) {
  double result = kInf;
  if (dims.lp > 0) result = u.head(dims.lp).minCoeff();
  for (size_t b = 0; b < dims.soc.size(); ++b) {
    const auto block = u.segment(dims.soc_offset(b), dims.soc[b]);
    result = std::min(result, block(0) - block.tail(block.size() - 1).norm());
  }
  for (size_t b = 0; b < dims.psd.size(); ++b) {
    const int side = dims.psd[b];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
        Smat(u.segment(dims.psd_offset(b), PackedTriangleSize(side)), side),
        Eigen::EigenvaluesOnly);
    result = std::min(result, eig.eigenvalues()(0));
  }
  return result;
}

Eigen::VectorXd JordanProduct(const ConeDims& dims, const Eigen::VectorXd& u,
                              const Eigen::VectorXd& v) {
  Eigen::VectorXd out(u.size());
  out.head(dims.lp) = u.head(dims.lp).cwiseProduct(v.head(dims.lp));
  for (size_t b = 0; b < dims.soc.size(); ++b) {
    const int o = dims.soc_offset(b);
    const int d = dims.soc[b];
    out(o) = u.segment(o, d).dot(v.segment(o, d));
    out.segment(o + 1, d - 1) =
        u(o) * v.segment(o + 1, d - 1) + v(o) * u.segment(o + 1, d - 1);
  }
  for (size_t b = 0; b < dims.psd.size(); ++b) {
    const int side = dims.psd[b];
    const int o = dims.psd_offset(b);
    const int d = PackedTriangleSize(side);
    const Eigen::MatrixXd um = Smat(u.segment(o, d), side);
    const Eigen::MatrixXd vm = Smat(v.segment(o, d), side);
    out.segment(o, d) = Svec(0.5 * (um * vm + vm * um));
  }
  return out;
}

bool NtScaling::Compute(const ConeDims& dims, const Eigen::VectorXd& s,
                        const Eigen::VectorXd& z) {
  dims_ = dims;
  lambda_.resize(dims.total());
  soc_beta_.clear();
  soc_w_.clear();
  inv_t_.soc.clear();
  inv_t_.psd_p.clear();
  psd_r_.clear();
  psd_lambda_.clear();

  const auto s_lp = s.head(dims.lp);
  const auto z_lp = z.head(dims.lp);
  if (dims.lp > 0 && (s_lp.minCoeff() <= 0.0 || z_lp.minCoeff() <= 0.0)) {
    return false;
  }
  lp_d_ = s_lp.cwiseQuotient(z_lp).cwiseSqrt();
  inv_t_.lp = lp_d_.cwiseInverse();
  lambda_.head(dims.lp) = s_lp.cwiseProduct(z_lp).cwiseSqrt();

  for (size_t b = 0; b < dims.soc.size(); ++b) {
    const int o = dims.soc_offset(b);
    const int d = dims.soc[b];
    const Eigen::VectorXd sb = s.segment(o, d);
    const Eigen::VectorXd zb = z.segment(o, d);
    const double s_sq = LorentzSquare(sb);
    const double z_sq = LorentzSquare(zb);
    if (sb(0) <= 0.0 || zb(0) <= 0.0 || s_sq <= 0.0 || z_sq <= 0.0) {
      return false;
    }
    const double aa = std::sqrt(s_sq);
    const double bb = std::sqrt(z_sq);
    const double beta = std::sqrt(aa / bb);
    const Eigen::VectorXd s_bar = sb / aa;
    Eigen::VectorXd jz_bar = -zb / bb;
    jz_bar(0) = -jz_bar(0);
    const double gamma = std::sqrt((s_bar.dot(zb / bb) + 1.0) / 2.0);
    const Eigen::VectorXd w = (s_bar + jz_bar) / (2.0 * gamma);
    soc_beta_.push_back(beta);
    soc_w_.push_back(w);
    inv_t_.soc.push_back(HyperbolicMatrix(w, -1.0) / beta);
    lambda_.segment(o, d) = beta * ApplyHyperbolic(w, zb, 1.0);
  }

  for (size_t b = 0; b < dims.psd.size(); ++b) {
    const int side = dims.psd[b];
    const int o = dims.psd_offset(b);
    const int d = PackedTriangleSize(side);
    Eigen::LLT<Eigen::MatrixXd> chol_s(Smat(s.segment(o, d), side));
    Eigen::LLT<Eigen::MatrixXd> chol_z(Smat(z.segment(o, d), side));
    if (chol_s.info() != Eigen::Success || chol_z.info() != Eigen::Success) {
      return false;
    }
    const Eigen::MatrixXd ls = chol_s.matrixL();
    const Eigen::MatrixXd lz = chol_z.matrixL();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(
        lz.transpose() * ls, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd sigma = svd.singularValues();
    if (sigma.minCoeff() <= 0.0) return false;
    const Eigen::VectorXd inv_sqrt = sigma.cwiseSqrt().cwiseInverse();
    const Eigen::MatrixXd r = ls * svd.matrixV() * inv_sqrt.asDiagonal();
    // R^{-1} = diag(sqrt(sigma)) V' Ls^{-1}.
    const Eigen::MatrixXd ls_inv = ls.triangularView<Eigen::Lower>().solve(
        Eigen::MatrixXd::Identity(side, side));
    const Eigen::MatrixXd r_inv =
        sigma.cwiseSqrt().asDiagonal() * svd.matrixV().transpose() * ls_inv;
    psd_r_.push_back(r);
    inv_t_.psd_p.push_back(r_inv);
    psd_lambda_.push_back(sigma);
    lambda_.segment(o, d) = Svec(sigma.asDiagonal().toDenseMatrix());
  }
  return true;
}

Eigen::VectorXd NtScaling::ApplyW(const Eigen::VectorXd& u) const {
  Eigen::VectorXd out(u.size());
  out.head(dims_.lp) = lp_d_.cwiseProduct(u.head(dims_.lp));
  for (size_t b = 0; b < dims_.soc.size(); ++b) {
    const int o = dims_.soc_offset(b);
    out.segment(o, dims_.soc[b]) =
        soc_beta_[b] *
        ApplyHyperbolic(soc_w_[b], u.segment(o, dims_.soc[b]), 1.0);
  }
  for (size_t b = 0; b < dims_.psd.size(); ++b) {
    const int side = dims_.psd[b];
    const int o = dims_.psd_offset(b);
    const int d = PackedTriangleSize(side);
    const Eigen::MatrixXd& r = psd_r_[b];
    out.segment(o, d) = Svec(r.transpose() * Smat(u.segment(o, d), side) * r);
  }
  return out;
}

Eigen::VectorXd NtScaling::ApplyWT(const Eigen::VectorXd& u) const {
  Eigen::VectorXd out = u;
  out.head(dims_.lp) = lp_d_.cwiseProduct(u.head(dims_.lp));
  for (size_t b = 0; b < dims_.soc.size(); ++b) {
    const int o = dims_.soc_offset(b);
    out.segment(o, dims_.soc[b]) =
        soc_beta_[b] *
        ApplyHyperbolic(soc_w_[b], u.segment(o, dims_.soc[b]), 1.0);
  }
  for (size_t b = 0; b < dims_.psd.size(); ++b) {
    const int side = dims_.psd[b];
    const int o = dims_.psd_offset(b);
    const int d = PackedTriangleSize(side);
    const Eigen::MatrixXd& r = psd_r_[b];
    out.segment(o, d) = Svec(r * Smat(u.segment(o, d), side) * r.transpose());
  }
  return out;
}

Eigen::VectorXd ConeScaling::Apply(const ConeDims& dims,
                                   const Eigen::VectorXd& u) const {
  Eigen::VectorXd out(u.size());
  out.head(dims.lp) = lp.cwiseProduct(u.head(dims.lp));
  for (size_t b = 0; b < dims.soc.size(); ++b) {
    const int o = dims.soc_offset(b);
    out.segment(o, dims.soc[b]) = soc[b] * u.segment(o, dims.soc[b]);
  }
  for (size_t b = 0; b < dims.psd.size(); ++b) {
    const int side = dims.psd[b];
    const int o = dims.psd_offset(b);
    const int d = PackedTriangleSize(side);
    const Eigen::MatrixXd& p = psd_p[b];
    out.segment(o, d) = Svec(p * Smat(u.segment(o, d), side) * p.transpose());
  }
  return out;
}

Eigen::VectorXd ConeScaling::ApplyT(const ConeDims& dims,
                                    const Eigen::VectorXd& u) const {
  Eigen::VectorXd out(u.size());
  out.head(dims.lp) = lp.cwiseProduct(u.head(dims.lp));
  for (size_t b = 0; b < dims.soc.size(); ++b) {
    const int o = dims.soc_offset(b);
    out.segment(o, dims.soc[b]) =
        soc[b].transpose() * u.segment(o, dims.soc[b]);
  }
  for (size_t b = 0; b < dims.psd.size(); ++b) {
    const int side = dims.psd[b];
    const int o = dims.psd_offset(b);
    const int d = PackedTriangleSize(side);
    const Eigen::MatrixXd& p = psd_p[b];
    out.segment(o, d) = Svec(p.transpose() * Smat(u.segment(o, d), side) * p);
  }
  return out;
}

Eigen::VectorXd NtScaling::ApplyWInvT(const Eigen::VectorXd& u) const {
  return inv_t_.Apply(dims_, u);
}

Eigen::VectorXd NtScaling::ApplyWInv(const Eigen::VectorXd& u) const {
  return inv_t_.ApplyT(dims_, u);
}

Eigen::VectorXd NtScaling::LambdaDivide(const Eigen::VectorXd& v) const {
  Eigen::VectorXd out(v.size());
  out.head(dims_.lp) = v.head(dims_.lp).cwiseQuotient(lambda_.head(dims_.lp));
  for (size_t b = 0; b < dims_.soc.size(); ++b) {
    const int o = dims_.soc_offset(b);
    const int d = dims_.soc[b];
    const auto l = lambda_.segment(o, d);
    const auto vb = v.segment(o, d);
    const double l0 = l(0);
    const auto l1 = l.tail(d - 1);
    const double x0 = (l0 * vb(0) - l1.dot(vb.tail(d - 1))) / LorentzSquare(l);
    out(o) = x0;
    out.segment(o + 1, d - 1) = (vb.tail(d - 1) - x0 * l1) / l0;
  }
  for (size_t b = 0; b < dims_.psd.size(); ++b) {
    const int side = dims_.psd[b];
    const int o = dims_.psd_offset(b);
    const Eigen::VectorXd& sigma = psd_lambda_[b];
    int e = o;
    for (int i = 0; i < side; ++i) {
      for (int j = i; j < side; ++j) {
        out(e) = 2.0 * v(e) / (sigma(i) + sigma(j));
        ++e;
      }
    }
  }
  return out;
}

double NtScaling::MaxStep(const Eigen::VectorXd& v) const {
  double alpha = kInf;
  for (int i = 0; i < dims_.lp; ++i) {
    if (v(i) < 0.0) alpha = std::min(alpha, -lambda_(i) / v(i));
  }
  for (size_t b = 0; b < dims_.soc.size(); ++b) {
    const int o = dims_.soc_offset(b);
    const int d = dims_.soc[b];
    alpha = std::min(alpha, SocMaxStep(lambda_.segment(o, d), v.segment(o, d)));
  }
  for (size_t b = 0; b < dims_.psd.size(); ++b) {
    const int side = dims_.psd[b];
    const int o = dims_.psd_offset(b);
    const Eigen::VectorXd inv_sqrt = psd_lambda_[b].cwiseSqrt().cwiseInverse();
    const Eigen::MatrixXd m =
        inv_sqrt.asDiagonal() *
        Smat(v.segment(o, PackedTriangleSize(side)), side) *
        inv_sqrt.asDiagonal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m,
                                                       Eigen::EigenvaluesOnly);
    const double min_eig = eig.eigenvalues()(0);
    if (min_eig < 0.0) alpha = std::min(alpha, -1.0 / min_eig);
  }
  return alpha;
}

double MaxStepToBoundary(const ConeDims& dims, const Eigen::VectorXd& u,
                         const Eigen::VectorXd& v) {
  double alpha = kInf;
  for (int i = 0; i < dims.lp; ++i) {
    if (v(i) < 0.0) alpha = std::min(alpha, -u(i) / v(i));
  }
  for (size_t b = 0; b < dims.soc.size(); ++b) {
    const int o = dims.soc_offset(b);
    const int d = dims.soc[b];
    alpha = std::min(alpha, SocMaxStep(u.segment(o, d), v.segment(o, d)));
  }
  for (size_t b = 0; b < dims.psd.size(); ++b) {
    const int side = dims.psd[b];
    const int o = dims.psd_offset(b);
    const int d = PackedTriangleSize(side);
    Eigen::LLT<Eigen::MatrixXd> chol(Smat(u.segment(o, d), side));
    const Eigen::MatrixXd l = chol.matrixL();
    const auto lower = l.triangularView<Eigen::Lower>();
    Eigen::MatrixXd m = lower.solve(Smat(v.segment(o, d), side));
    m = lower.solve(m.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
        0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
    const double min_eig = eig.eigenvalues()(0);
    if (min_eig < 0.0) alpha = std::min(alpha, -1.0 / min_eig);
  }
  return alpha;
}

}  // namespace aroqdr::internal
