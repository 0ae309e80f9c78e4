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

// Solver-side machinery shared by the backends: conversion of a ConicProgram
// to the standard form
//
//   minimize c'x  subject to  G x + s = h,  A x = b,  s in K,
//
// where K is ordered as [nonnegative orthant | SOC blocks | PSD blocks], the
// Jordan algebra of K, and Nesterov-Todd scalings. PSD blocks are stored in
// svec form: row-major upper triangle with off-diagonals scaled by sqrt(2),
// so that the Euclidean inner product matches the trace inner product.

#ifndef AROQDR_SOLVERS_CONES_H_
#define AROQDR_SOLVERS_CONES_H_

#include <vector>

#include "Eigen/Core"
#include "Eigen/SparseCore"
#include "aroqdr/conic_program.h"

namespace aroqdr::internal {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

struct ConeDims {
  int lp = 0;
  std::vector<int> soc;  // dimensions
  std::vector<int> psd;  // side lengths

  int total() const;
  // Barrier degree: lp + #soc + sum of PSD sides.
  int degree() const;
  int soc_offset(int b) const;
  int psd_offset(int b) const;
};

struct StandardForm {
  int num_original_vars = 0;
  // Reduced variable j corresponds to original variable kept[j].
  std::vector<int> kept;
  // Original variables that appear nowhere in the constraints but carry a
  // nonzero cost; the program is then unbounded or has an unconstrained
  // direction.
  bool free_cost_column = false;
  Eigen::VectorXd c;
  double c_constant = 0.0;
  SparseMatrix G;
  Eigen::VectorXd h;
  SparseMatrix A;
  Eigen::VectorXd b;
  ConeDims dims;

  int n() const { return static_cast<int>(c.size()); }
  Eigen::VectorXd Expand(const Eigen::VectorXd& reduced) const;
};

StandardForm ToStandardForm(const ConicProgram& program);

// Diagonal scalings from Ruiz equilibration of [G; A]. Each orthant row,
// equality row and whole SOC or PSD block gets one factor, so the cone is
// unchanged. The scaled problem has solution x = col .* x_scaled.
struct Equilibration {
  Eigen::VectorXd col;
  Eigen::VectorXd row_g;
  Eigen::VectorXd row_a;
};

// Rescales `form` in place (G, h, A, b and c) and returns the factors.
Equilibration Equilibrate(StandardForm& form, int passes = 20);

// svec / smat for symmetric matrices.
Eigen::VectorXd Svec(const Eigen::MatrixXd& matrix);
Eigen::MatrixXd Smat(const Eigen::VectorXd& packed, int side);

// Jordan-algebra helpers over the whole cone K.
Eigen::VectorXd Identity(const ConeDims& dims);
// Smallest "eigenvalue" of u: min entry, u0 - |u1|, or lambda_min.
double MinEigenvalue(const ConeDims& dims, const Eigen::VectorXd& u);
Eigen::VectorXd JordanProduct(const ConeDims& dims, const Eigen::VectorXd& u,
                              const Eigen::VectorXd& v);
// Largest alpha with u + alpha * v in K for u in the interior of K; infinity
// when the ray never leaves K.
double MaxStepToBoundary(const ConeDims& dims, const Eigen::VectorXd& u,
                         const Eigen::VectorXd& v);

// Block-diagonal linear map M on the cone space: a diagonal on the orthant,
// dense matrices on SOC blocks, and U -> P U P' on PSD blocks. The KKT
// systems use the weight M'M.
struct ConeScaling {
  Eigen::VectorXd lp;
  std::vector<Eigen::MatrixXd> soc;
  std::vector<Eigen::MatrixXd> psd_p;

  Eigen::VectorXd Apply(const ConeDims& dims, const Eigen::VectorXd& u) const;
  Eigen::VectorXd ApplyT(const ConeDims& dims, const Eigen::VectorXd& u) const;
};

// Nesterov-Todd scaling W for a strictly feasible pair (s, z): W z = W^{-T} s
// = lambda. PSD blocks of lambda are diagonal.
class NtScaling {
 public:
  // Returns false if s or z is not in the interior of K.
  bool Compute(const ConeDims& dims, const Eigen::VectorXd& s,
               const Eigen::VectorXd& z);

  const Eigen::VectorXd& lambda() const { return lambda_; }
  Eigen::VectorXd ApplyW(const Eigen::VectorXd& u) const;
  Eigen::VectorXd ApplyWT(const Eigen::VectorXd& u) const;
  // W^{-T} u and W^{-1} u.
  Eigen::VectorXd ApplyWInvT(const Eigen::VectorXd& u) const;
  Eigen::VectorXd ApplyWInv(const Eigen::VectorXd& u) const;
  // Solves lambda o x = v.
  Eigen::VectorXd LambdaDivide(const Eigen::VectorXd& v) const;
  // Largest alpha with lambda + alpha * v in K (infinity if unbounded).
  double MaxStep(const Eigen::VectorXd& v) const;

  // W^{-T} in block form, so that (W'W)^{-1} = M'M.
  const ConeScaling& inverse_transpose() const { return inv_t_; }
  const ConeDims& dims() const { return dims_; }

 private:
  ConeDims dims_;
  Eigen::VectorXd lambda_;
  Eigen::VectorXd lp_d_;
  ConeScaling inv_t_;
  std::vector<double> soc_beta_;
  std::vector<Eigen::VectorXd> soc_w_;
  std::vector<Eigen::MatrixXd> psd_r_;
  std::vector<Eigen::VectorXd> psd_lambda_;
};

}  // namespace aroqdr::internal

#endif  // AROQDR_SOLVERS_CONES_H_
