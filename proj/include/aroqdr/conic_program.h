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

// Solver-neutral conic program representation:
//
//   minimize    objective(v)
//   subject to  row_r(v) in K_r,   r = 1..R
//
// where each row is a list of affine expressions in the variables v and K_r is
// the zero cone, the nonnegative orthant, a second-order cone
// {(t, u) : |u| <= t}, or the cone of positive semidefinite matrices. PSD rows
// hold the upper triangle of a symmetric matrix in row-major order with plain
// (unscaled) off-diagonal entries.

#ifndef AROQDR_CONIC_PROGRAM_H_
#define AROQDR_CONIC_PROGRAM_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "Eigen/Core"
#include "absl/status/status.h"
#include "aroqdr/layout.h"

namespace aroqdr {

// Sparse affine function constant + sum_t coefs[t] * v[vars[t]]. Repeated
// variables are allowed and add up.
struct AffineExpr {
  std::vector<int> vars;
  std::vector<double> coefs;
  double constant = 0.0;

  AffineExpr() = default;
  explicit AffineExpr(double value) : constant(value) {}

  // Exact zeros are dropped so that structurally absent terms stay absent.
  AffineExpr& Add(int var, double coef);
  AffineExpr& AddConstant(double value);
  AffineExpr& AddScaled(const AffineExpr& other, double scale);

  double Evaluate(const Eigen::VectorXd& values) const;
  // Sum of the coefficients attached to `var`.
  double Coefficient(int var) const;
  // Merges repeated variables and drops zero coefficients; sorts by variable.
  AffineExpr Canonical() const;
};

enum class ConeKind { kZero, kNonnegative, kSecondOrder, kPsd };

std::string_view ConeKindName(ConeKind kind);

struct ConeConstraint {
  ConeKind kind = ConeKind::kNonnegative;
  std::vector<AffineExpr> entries;
  int side = 0;  // PSD only: matrix side length
  std::string label;

  int dim() const { return static_cast<int>(entries.size()); }
};

int PackedTriangleSize(int side);
// Position of entry (i, j) in the row-major upper triangle; order-agnostic.
int PackedIndex(int i, int j, int side);

struct ConicProgram {
  std::string name;
  int num_vars = 0;
  AffineExpr objective;  // minimized
  std::vector<ConeConstraint> rows;
  std::optional<RuleLayout> layout;

  // Returns the index of the first of `count` fresh variables.
  int AddVariables(int count);
  void AddRow(ConeConstraint row) { rows.push_back(std::move(row)); }
};

// Checks variable indices, PSD packing sizes and SOC dimensions.
absl::Status ValidateProgram(const ConicProgram& program);

Eigen::VectorXd EvaluateRow(const ConeConstraint& row,
                            const Eigen::VectorXd& values);
// Symmetric matrix of a PSD row at `values`.
Eigen::MatrixXd EvaluatePsdRow(const ConeConstraint& row,
                               const Eigen::VectorXd& values);

// Distance-like violation of one row: max |e| for zero rows, max(0, -min e)
// for nonnegative rows, max(0, |u| - t) for SOC rows and max(0, -lambda_min)
// for PSD rows.
double RowViolation(const ConeConstraint& row, const Eigen::VectorXd& values);
double MaxViolation(const ConicProgram& program, const Eigen::VectorXd& values);

// Human-readable dump of the program, one row per block.
std::string DumpProgram(const ConicProgram& program);

}  // namespace aroqdr

#endif  // AROQDR_CONIC_PROGRAM_H_
