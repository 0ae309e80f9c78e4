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

#include "aroqdr/conic_program.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "Eigen/Eigenvalues"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace aroqdr {

AffineExpr& AffineExpr::Add(int var, double coef) {
  if (coef != 0.0) {
    vars.push_back(var);
    coefs.push_back(coef);
  }
  return *this;
}

AffineExpr& AffineExpr::AddConstant(double value) {
  constant += value;
  return *this;
}

AffineExpr& AffineExpr::AddScaled(const AffineExpr& other, double scale) {
  for (size_t t = 0; t < other.vars.size(); ++t) {
    Add(other.vars[t], scale * other.coefs[t]);
  }
  constant += scale * other.constant;
  return *this;
}

double AffineExpr::Evaluate(const Eigen::VectorXd& values) const {
  double total = constant;
  for (size_t t = 0; t < vars.size(); ++t) total += coefs[t] * values(vars[t]);
  return total;
}

double AffineExpr::Coefficient(int var) const {
  double total = 0.0;
  for (size_t t = 0; t < vars.size(); ++t) {
    if (vars[t] == var) total += coefs[t];
  }
  return total;
}

AffineExpr AffineExpr::Canonical() const {
  std::map<int, double> merged;
  for (size_t t = 0; t < vars.size(); ++t) merged[vars[t]] += coefs[t];
  AffineExpr out(constant);
  for (const auto& [var, coef] : merged) out.Add(var, coef);
  return out;
}

std::string_view ConeKindName(ConeKind kind) {
  switch (kind) {
    case ConeKind::kZero:
      return "zero";
    case ConeKind::kNonnegative:
      return "nonneg";
    case ConeKind::kSecondOrder:
      return "soc";
    case ConeKind::kPsd:
      return "psd";
  }
  return "unknown";
}

int PackedTriangleSize(int side) { return side * (side + 1) / 2; }

int PackedIndex(int i, int j, int side) {
  if (i > j) std::swap(i, j);
  // Rows 0..i-1 hold side + (side-1) + ... + (side-i+1) entries.
  return i * side - i * (i - 1) / 2 + (j - i);
}

int ConicProgram::AddVariables(int count) {
  const int first = num_vars;
  num_vars += count;
  return first;
}

absl::Status ValidateProgram(const ConicProgram& program) {
  if (program.num_vars < 0) {
    return absl::InvalidArgumentError("negative variable count");
  }
  if (program.num_vars == 0 && !program.rows.empty()) {
    return absl::InvalidArgumentError(
        "ill-posed program: constraints over zero variables");
  }
  auto check_expr = [&](const AffineExpr& expr,
                        const std::string& where) -> absl::Status {
    if (expr.vars.size() != expr.coefs.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat(where, ": mismatched term arrays"));
    }
    for (size_t t = 0; t < expr.vars.size(); ++t) {
      if (expr.vars[t] < 0 || expr.vars[t] >= program.num_vars) {
        return absl::InvalidArgumentError(
            absl::StrCat(where, ": variable ", expr.vars[t],
                         " out of range [0, ", program.num_vars, ")"));
      }
      if (!std::isfinite(expr.coefs[t])) {
        return absl::InvalidArgumentError(
            absl::StrCat(where, ": non-finite coefficient"));
      }
    }
    if (!std::isfinite(expr.constant)) {
      return absl::InvalidArgumentError(
          absl::StrCat(where, ": non-finite constant"));
    }
    return absl::OkStatus();
  };
  if (absl::Status status = check_expr(program.objective, "objective");
      !status.ok()) {
    return status;
  }
  for (size_t r = 0; r < program.rows.size(); ++r) {
    const ConeConstraint& row = program.rows[r];
    const std::string where = absl::StrCat("row ", r, " (", row.label, ")");
    if (row.entries.empty()) {
      return absl::InvalidArgumentError(absl::StrCat(where, ": empty row"));
    }
    if (row.kind == ConeKind::kSecondOrder && row.dim() < 2) {
      return absl::InvalidArgumentError(
          absl::StrCat(where, ": second-order cone needs dimension >= 2"));
    }
    if (row.kind == ConeKind::kPsd) {
      if (row.side < 1 || row.dim() != PackedTriangleSize(row.side)) {
        return absl::InvalidArgumentError(
            absl::StrCat(where, ": PSD block of side ", row.side, " needs ",
                         PackedTriangleSize(std::max(row.side, 0)),
                         " entries, got ", row.dim()));
      }
    }
    for (const AffineExpr& expr : row.entries) {
      if (absl::Status status = check_expr(expr, where); !status.ok()) {
        return status;
      }
    }
  }
  return absl::OkStatus();
}

Eigen::VectorXd EvaluateRow(const ConeConstraint& row,
                            const Eigen::VectorXd& values) {
  Eigen::VectorXd out(row.dim());
  for (int e = 0; e < row.dim(); ++e) out(e) = row.entries[e].Evaluate(values);
  return out;
}

Eigen::MatrixXd EvaluatePsdRow(const ConeConstraint& row,
                               const Eigen::VectorXd& values) {
  Eigen::MatrixXd matrix(row.side, row.side);
  for (int i = 0; i < row.side; ++i) {
    for (int j = i; j < row.side; ++j) {
      const double value =
          row.entries[PackedIndex(i, j, row.side)].Evaluate(values);
      matrix(i, j) = value;
      matrix(j, i) = value;
    }
  }
  return matrix;
}

double RowViolation(const ConeConstraint& row, const Eigen::VectorXd& values) {
  switch (row.kind) {
    case ConeKind::kZero:
      return EvaluateRow(row, values).cwiseAbs().maxCoeff();
    case ConeKind::kNonnegative:
      return std::max(0.0, -EvaluateRow(row, values).minCoeff());
    case ConeKind::kSecondOrder: {
      const Eigen::VectorXd u = EvaluateRow(row, values);
      return std::max(0.0, u.tail(u.size() - 1).norm() - u(0));
    }
    case ConeKind::kPsd: {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
          EvaluatePsdRow(row, values), Eigen::EigenvaluesOnly);
      return std::max(0.0, -eig.eigenvalues()(0));
    }
  }
  return 0.0;
}

double MaxViolation(const ConicProgram& program,
                    const Eigen::VectorXd& values) {
  double worst = 0.0;
  for (const ConeConstraint& row : program.rows) {
    worst = std::max(worst, RowViolation(row, values));
  }
  return worst;
}

namespace {

std::string FormatExpr(const AffineExpr& expr, const ConicProgram& program) {
  const AffineExpr canonical = expr.Canonical();
  std::string text;
  for (size_t t = 0; t < canonical.vars.size(); ++t) {
    const double coef = canonical.coefs[t];
    const std::string name =
        program.layout.has_value()
            ? VariableName(*program.layout, canonical.vars[t])
            : absl::StrCat("v", canonical.vars[t]);
    if (text.empty()) {
      absl::StrAppend(&text, coef < 0 ? "-" : "");
    } else {
      absl::StrAppend(&text, coef < 0 ? " - " : " + ");
    }
    const double magnitude = std::abs(coef);
    if (magnitude != 1.0)
      absl::StrAppend(&text, absl::StrFormat("%.17g*", magnitude));
    absl::StrAppend(&text, name);
  }
  if (canonical.constant != 0.0 || text.empty()) {
    if (text.empty()) {
      absl::StrAppend(&text, absl::StrFormat("%.17g", canonical.constant));
    } else {
      absl::StrAppend(&text, canonical.constant < 0 ? " - " : " + ",
                      absl::StrFormat("%.17g", std::abs(canonical.constant)));
    }
  }
  return text;
}

}  // namespace

std::string DumpProgram(const ConicProgram& program) {
  std::string out;
  absl::StrAppend(&out, "program ",
                  program.name.empty() ? "(unnamed)" : program.name, "\n");
  if (program.layout.has_value()) {
    absl::StrAppend(&out, "layout ", LayoutKindName(*program.layout), "\n");
  }
  absl::StrAppend(&out, "variables ", program.num_vars, "\n");
  absl::StrAppend(&out, "minimize ", FormatExpr(program.objective, program),
                  "\n");
  for (size_t r = 0; r < program.rows.size(); ++r) {
    const ConeConstraint& row = program.rows[r];
    absl::StrAppend(&out, "row ", r, " ", std::string(ConeKindName(row.kind)),
                    " dim ", row.dim());
    if (row.kind == ConeKind::kPsd) absl::StrAppend(&out, " side ", row.side);
    if (!row.label.empty()) absl::StrAppend(&out, " [", row.label, "]");
    absl::StrAppend(&out, "\n");
    if (row.kind == ConeKind::kPsd) {
      for (int i = 0; i < row.side; ++i) {
        for (int j = i; j < row.side; ++j) {
          absl::StrAppend(
              &out, "  (", i, ",", j, ") ",
              FormatExpr(row.entries[PackedIndex(i, j, row.side)], program),
              "\n");
        }
      }
    } else {
      for (int e = 0; e < row.dim(); ++e) {
        absl::StrAppend(&out, "  [", e, "] ",
                        FormatExpr(row.entries[e], program), "\n");
      }
    }
  }
  return out;
}

}  // namespace aroqdr
