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

#include "aroqdr/model.h"

#include <cmath>
#include <iostream>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace aroqdr {
namespace {

// Exact comparison including shape; used for round-trip identity checks.
template <typename Derived1, typename Derived2>
bool SameExact(const Eigen::DenseBase<Derived1>& u,
               const Eigen::DenseBase<Derived2>& v) {
  return u.rows() == v.rows() && u.cols() == v.cols() &&
         (u.size() == 0 || (u.derived().array() == v.derived().array()).all());
}

bool IsFinite(const Eigen::MatrixXd& m) { return m.allFinite(); }

void CheckShape(const std::string& field, Eigen::Index rows, Eigen::Index cols,
                Eigen::Index want_rows, Eigen::Index want_cols,
                std::vector<Diagnostic>& out) {
  if (rows != want_rows || cols != want_cols) {
    out.push_back({field, absl::StrCat("expected shape ", want_rows, "x",
                                       want_cols, ", got ", rows, "x", cols)});
  }
}

}  // namespace

bool ConstraintRow::operator==(const ConstraintRow& other) const {
  return SameExact(a, other.a) && SameExact(A, other.A) &&
         SameExact(b, other.b) && d0 == other.d0 && SameExact(d, other.d);
}

bool CostUncertainty::operator==(const CostUncertainty& other) const {
  return SameExact(c0, other.c0) && rho == other.rho;
}

bool AroProblem::operator==(const AroProblem& other) const {
  if (n != other.n || k != other.k || !SameExact(c, other.c) ||
      rows != other.rows || uncertainty.radius != other.uncertainty.radius ||
      uncertainty.dim != other.uncertainty.dim ||
      w.has_value() != other.w.has_value() ||
      cost_uncertainty != other.cost_uncertainty) {
    return false;
  }
  return !w.has_value() || SameExact(*w, *other.w);
}

bool QdrCoefficients::operator==(const QdrCoefficients& other) const {
  if (theta != other.theta || separable != other.separable ||
      !SameExact(y0, other.y0) || !SameExact(W, other.W) ||
      Q.size() != other.Q.size()) {
    return false;
  }
  for (size_t j = 0; j < Q.size(); ++j) {
    if (!SameExact(Q[j], other.Q[j])) return false;
  }
  return true;
}

absl::StatusOr<QdrCoefficients> MakeQdrCoefficients(
    double theta, Eigen::VectorXd y0, Eigen::MatrixXd W,
    std::vector<Eigen::MatrixXd> Q, bool separable) {
  QdrCoefficients rule;
  rule.theta = theta;
  rule.y0 = std::move(y0);
  rule.W = std::move(W);
  rule.separable = separable;
  const int k = rule.k();
  const int l = rule.l();
  if (rule.W.rows() != k) {
    return absl::InvalidArgumentError(
        absl::StrCat("W has ", rule.W.rows(), " rows, expected k = ", k));
  }
  if (static_cast<int>(Q.size()) != k) {
    return absl::InvalidArgumentError(
        absl::StrCat("expected ", k, " Q matrices, got ", Q.size()));
  }
  for (int j = 0; j < k; ++j) {
    Eigen::MatrixXd& q = Q[j];
    if (q.rows() != l || q.cols() != l) {
      return absl::InvalidArgumentError(absl::StrCat(
          "Q[", j, "] is ", q.rows(), "x", q.cols(), ", expected ", l, "x", l));
    }
    const double asymmetry =
        l == 0 ? 0.0 : (q - q.transpose()).cwiseAbs().maxCoeff();
    if (asymmetry > kSymmetrizeWarnThreshold) {
      std::cerr << "warning: Q[" << j << "] asymmetric by " << asymmetry
                << "; using its symmetric part\n";
    }
    Eigen::MatrixXd sym = 0.5 * (q + q.transpose());
    if (separable) sym = Eigen::MatrixXd(sym.diagonal().asDiagonal());
    q = std::move(sym);
  }
  rule.Q = std::move(Q);
  if (auto diagnostics = ValidateRule(rule, k, l); !diagnostics.empty()) {
    return absl::InvalidArgumentError(FormatDiagnostics(diagnostics));
  }
  return rule;
}

QdrCoefficients ZeroRule(double theta, int k, int l, bool separable) {
  QdrCoefficients rule;
  rule.theta = theta;
  rule.y0 = Eigen::VectorXd::Zero(k);
  rule.W = Eigen::MatrixXd::Zero(k, l);
  rule.Q.assign(k, Eigen::MatrixXd::Zero(l, l));
  rule.separable = separable;
  return rule;
}

absl::StatusOr<Eigen::VectorXd> EvaluateRule(const QdrCoefficients& rule,
                                             const Eigen::VectorXd& z) {
  if (z.size() != rule.l()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "z has length ", z.size(), ", rule expects l = ", rule.l()));
  }
  const int k = rule.k();
  Eigen::VectorXd quadratic(k);
  for (int j = 0; j < k; ++j) quadratic(j) = z.dot(rule.Q[j] * z);
  return rule.theta * (rule.y0 + rule.W * z) + (1.0 - rule.theta) * quadratic;
}

absl::StatusOr<Eigen::VectorXd> ConstraintResiduals(const AroProblem& problem,
                                                    const Eigen::VectorXd& x,
                                                    const QdrCoefficients& rule,
                                                    const Eigen::VectorXd& z) {
  if (x.size() != problem.n) {
    return absl::InvalidArgumentError(
        absl::StrCat("x has length ", x.size(), ", expected n = ", problem.n));
  }
  if (rule.k() != problem.k) {
    return absl::InvalidArgumentError(absl::StrCat(
        "rule has k = ", rule.k(), ", problem has k = ", problem.k));
  }
  if (z.size() != problem.l()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "z has length ", z.size(), ", expected l = ", problem.l()));
  }
  absl::StatusOr<Eigen::VectorXd> y = EvaluateRule(rule, z);
  if (!y.ok()) return y.status();
  Eigen::VectorXd residuals(problem.m());
  for (int i = 0; i < problem.m(); ++i) {
    const ConstraintRow& row = problem.rows[i];
    residuals(i) =
        (row.a + row.A * z).dot(x) + row.b.dot(*y) - row.d0 - row.d.dot(z);
  }
  return residuals;
}

std::vector<Diagnostic> Validate(const AroProblem& problem) {
  std::vector<Diagnostic> out;
  const int n = problem.n;
  const int k = problem.k;
  const int l = problem.uncertainty.dim;
  if (n < 1) out.push_back({"n", "need at least one first-stage variable"});
  if (k < 1) out.push_back({"k", "need at least one adjustable variable"});
  if (l < 1) out.push_back({"uncertainty.dim", "need l >= 1"});
  if (!(problem.uncertainty.radius > 0.0) ||
      !std::isfinite(problem.uncertainty.radius)) {
    out.push_back({"uncertainty.radius",
                   absl::StrCat("radius must be finite and r > 0 (got ",
                                problem.uncertainty.radius,
                                "); the S-lemma needs a Slater point")});
  }
  if (problem.m() < 1)
    out.push_back({"rows", "need at least one row (m >= 1)"});
  CheckShape("c", problem.c.size(), 1, n, 1, out);
  if (!IsFinite(problem.c)) out.push_back({"c", "non-finite entry"});
  for (int i = 0; i < problem.m(); ++i) {
    const ConstraintRow& row = problem.rows[i];
    const std::string prefix = absl::StrCat("rows[", i, "].");
    CheckShape(prefix + "a", row.a.size(), 1, n, 1, out);
    CheckShape(prefix + "A", row.A.rows(), row.A.cols(), n, l, out);
    CheckShape(prefix + "b", row.b.size(), 1, k, 1, out);
    CheckShape(prefix + "d", row.d.size(), 1, l, 1, out);
    if (!IsFinite(row.a) || !IsFinite(row.A) || !IsFinite(row.b) ||
        !IsFinite(row.d) || !std::isfinite(row.d0)) {
      out.push_back({prefix.substr(0, prefix.size() - 1), "non-finite entry"});
    }
  }
  if (problem.w.has_value()) {
    CheckShape("w", problem.w->size(), 1, k, 1, out);
    if (!IsFinite(*problem.w)) out.push_back({"w", "non-finite entry"});
  }
  if (problem.cost_uncertainty.has_value()) {
    const CostUncertainty& cu = *problem.cost_uncertainty;
    CheckShape("cost_uncertainty.c0", cu.c0.size(), 1, n, 1, out);
    if (!(cu.rho >= 0.0) || !std::isfinite(cu.rho)) {
      out.push_back({"cost_uncertainty.rho", "rho must be finite and >= 0"});
    }
  }
  return out;
}

std::vector<Diagnostic> ValidateRule(const QdrCoefficients& rule, int k,
                                     int l) {
  std::vector<Diagnostic> out;
  if (!(rule.theta >= 0.0 && rule.theta <= 1.0)) {
    out.push_back(
        {"theta", absl::StrCat("theta must lie in [0, 1], got ", rule.theta)});
  }
  CheckShape("y0", rule.y0.size(), 1, k, 1, out);
  CheckShape("W", rule.W.rows(), rule.W.cols(), k, l, out);
  if (static_cast<int>(rule.Q.size()) != k) {
    out.push_back(
        {"Q", absl::StrCat("expected ", k, " matrices, got ", rule.Q.size())});
    return out;
  }
  for (int j = 0; j < k; ++j) {
    const Eigen::MatrixXd& q = rule.Q[j];
    const std::string field = absl::StrCat("Q[", j, "]");
    if (q.rows() != l || q.cols() != l) {
      CheckShape(field, q.rows(), q.cols(), l, l, out);
      continue;
    }
    if (l == 0) continue;
    const double asymmetry = (q - q.transpose()).cwiseAbs().maxCoeff();
    if (asymmetry > kSymmetryTolerance) {
      out.push_back({field, absl::StrCat("not symmetric (max |Q - Q'| = ",
                                         asymmetry, ")")});
    }
    if (rule.separable) {
      Eigen::MatrixXd off = q;
      off.diagonal().setZero();
      if ((off.array() != 0.0).any()) {
        out.push_back({field, "separable rule requires a diagonal matrix"});
      }
    }
  }
  return out;
}

std::string FormatDiagnostics(const std::vector<Diagnostic>& diagnostics) {
  std::string text;
  for (const Diagnostic& diagnostic : diagnostics) {
    if (!text.empty()) text += "; ";
    absl::StrAppend(&text, diagnostic.field, ": ", diagnostic.message);
  }
  return text;
}

}  // namespace aroqdr
