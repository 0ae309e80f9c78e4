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

#ifndef AROQDR_SOLVERS_KKT_H_
#define AROQDR_SOLVERS_KKT_H_

#include <vector>

#include "Eigen/Cholesky"
#include "Eigen/Core"
#include "Eigen/LU"
#include "solvers/cones.h"

namespace aroqdr::internal {

// Solves
//
//   [ 0   A'  G'          ] [dx]   [rx]
//   [ A   0   0           ] [dy] = [ry]
//   [ G   0  -(M'M)^{-1}  ] [dz]   [rz]
//
// through the reduced system [(MG)'(MG), A'; A, 0] with a small diagonal
// regularization and iterative refinement against the unregularized matrix.
// The z part is returned scaled, dz_scaled = M^{-T} dz = M (G dx - rz), which
// avoids forming the ill-conditioned product M'M near the boundary.
class ReducedKkt {
 public:
  explicit ReducedKkt(const StandardForm& form);

  // Factors with H = (MG)'(MG) + diag(extra_diagonal). Returns false if the
  // factorization fails even after regularization.
  bool Factor(const ConeScaling& scaling,
              const Eigen::VectorXd* extra_diagonal = nullptr);
  void Solve(const Eigen::VectorXd& rx, const Eigen::VectorXd& ry,
             const Eigen::VectorXd& rz, Eigen::VectorXd& dx,
             Eigen::VectorXd& dy, Eigen::VectorXd& dz_scaled) const;

  // Same system with the z right-hand side given as M rz. Refinement runs
  // against the full scaled system.
  void SolveScaled(const Eigen::VectorXd& rx, const Eigen::VectorXd& ry,
                   const Eigen::VectorXd& rz_scaled, Eigen::VectorXd& dx,
                   Eigen::VectorXd& dy, Eigen::VectorXd& dz_scaled) const;

  // Solves [H A'; A 0] [dx; dy] = [r1; r2] for the last factored H.
  void SolveReduced(const Eigen::VectorXd& r1, const Eigen::VectorXd& r2,
                    Eigen::VectorXd& dx, Eigen::VectorXd& dy) const;

 private:
  struct Block {
    std::vector<int> cols;
    Eigen::MatrixXd g;  // block rows restricted to `cols`
  };

  const StandardForm& form_;
  SparseMatrix gt_;  // G'
  SparseMatrix at_;  // A'
  std::vector<Block> soc_blocks_;
  std::vector<Block> psd_blocks_;
  const ConeScaling* scaling_ = nullptr;
  Eigen::MatrixXd h_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  bool use_lu_ = false;
  double reg_ = 0.0;
};

}  // namespace aroqdr::internal

#endif  // AROQDR_SOLVERS_KKT_H_
