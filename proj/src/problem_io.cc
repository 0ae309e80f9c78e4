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

#include "aroqdr/problem_io.h"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"

namespace aroqdr {
namespace {

using nlohmann::json;

json VectorToJson(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json MatrixToJson(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

absl::Status FieldError(const std::string& field, const std::string& what) {
  return absl::InvalidArgumentError(
      absl::StrCat("schema error at '", field, "': ", what));
}

absl::StatusOr<const json*> Member(const json& object, const std::string& key,
                                   const std::string& path) {
  const std::string field = path.empty() ? key : absl::StrCat(path, ".", key);
  if (!object.is_object()) return FieldError(path, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) return FieldError(field, "missing required field");
  return &*it;
}

absl::StatusOr<double> ReadNumber(const json& value, const std::string& field) {
  if (!value.is_number()) return FieldError(field, "expected a number");
  return value.get<double>();
}

absl::StatusOr<int> ReadInt(const json& value, const std::string& field) {
  if (!value.is_number_integer())
    return FieldError(field, "expected an integer");
  return value.get<int>();
}

absl::StatusOr<Eigen::VectorXd> ReadVector(const json& value,
                                           const std::string& field,
                                           Eigen::Index size) {
  if (!value.is_array()) return FieldError(field, "expected an array");
  if (static_cast<Eigen::Index>(value.size()) != size) {
    return FieldError(
        field, absl::StrCat("expected ", size, " entries, got ", value.size()));
  }
  Eigen::VectorXd out(size);
  for (Eigen::Index i = 0; i < size; ++i) {
    absl::StatusOr<double> entry =
        ReadNumber(value[i], absl::StrCat(field, "[", i, "]"));
    if (!entry.ok()) return entry.status();
    out(i) = *entry;
  }
  return out;
}

absl::StatusOr<Eigen::MatrixXd> ReadMatrix(const json& value,
                                           const std::string& field,
                                           Eigen::Index rows,
                                           Eigen::Index cols) {
  if (!value.is_array()) return FieldError(field, "expected an array of rows");
  if (static_cast<Eigen::Index>(value.size()) != rows) {
    return FieldError(
        field, absl::StrCat("expected ", rows, " rows, got ", value.size()));
  }
  Eigen::MatrixXd out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    absl::StatusOr<Eigen::VectorXd> row =
        ReadVector(value[i], absl::StrCat(field, "[", i, "]"), cols);
    if (!row.ok()) return row.status();
    out.row(i) = row->transpose();
  }
  return out;
}

absl::Status CheckVersion(const json& root, int expected) {
  absl::StatusOr<const json*> version = Member(root, "version", "");
  if (!version.ok()) return version.status();
  absl::StatusOr<int> value = ReadInt(**version, "version");
  if (!value.ok()) return value.status();
  if (*value != expected) {
    return absl::FailedPreconditionError(
        absl::StrCat("schema version mismatch: file has version ", *value,
                     ", this build reads version ", expected));
  }
  return absl::OkStatus();
}

absl::StatusOr<json> ParseJson(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Map the byte offset back to a line number for the message.
    const size_t offset = std::min<size_t>(e.byte, text.size());
    int line = 1;
    for (size_t i = 0; i + 1 < offset; ++i) {
      if (text[i] == '\n') ++line;
    }
    return absl::InvalidArgumentError(
        absl::StrCat("JSON parse error at line ", line, ": ", e.what()));
  }
}

}  // namespace

json ProblemToJson(const AroProblem& problem) {
  json root;
  root["version"] = kProblemSchemaVersion;
  root["n"] = problem.n;
  root["k"] = problem.k;
  root["l"] = problem.l();
  root["m"] = problem.m();
  root["c"] = VectorToJson(problem.c);
  json rows = json::array();
  for (const ConstraintRow& row : problem.rows) {
    json entry;
    entry["a"] = VectorToJson(row.a);
    entry["A"] = MatrixToJson(row.A);
    entry["b"] = VectorToJson(row.b);
    entry["d0"] = row.d0;
    entry["d"] = VectorToJson(row.d);
    rows.push_back(std::move(entry));
  }
  root["rows"] = std::move(rows);
  root["uncertainty"] = {{"radius", problem.uncertainty.radius}};
  if (problem.w.has_value()) root["w"] = VectorToJson(*problem.w);
  if (problem.cost_uncertainty.has_value()) {
    root["cost_uncertainty"] = {
        {"c0", VectorToJson(problem.cost_uncertainty->c0)},
        {"rho", problem.cost_uncertainty->rho}};
  }
  return root;
}

absl::StatusOr<AroProblem> ProblemFromJson(const json& root) {
  if (absl::Status status = CheckVersion(root, kProblemSchemaVersion);
      !status.ok()) {
    return status;
  }
  int dims[4];
  const char* names[4] = {"n", "k", "l", "m"};
  for (int i = 0; i < 4; ++i) {
    absl::StatusOr<const json*> member = Member(root, names[i], "");
    if (!member.ok()) return member.status();
    absl::StatusOr<int> value = ReadInt(**member, names[i]);
    if (!value.ok()) return value.status();
    if (*value < 0) return FieldError(names[i], "must be nonnegative");
    dims[i] = *value;
  }
  const int n = dims[0], k = dims[1], l = dims[2], m = dims[3];

  AroProblem problem;
  problem.n = n;
  problem.k = k;
  problem.uncertainty.dim = l;

  absl::StatusOr<const json*> c = Member(root, "c", "");
  if (!c.ok()) return c.status();
  absl::StatusOr<Eigen::VectorXd> c_value = ReadVector(**c, "c", n);
  if (!c_value.ok()) return c_value.status();
  problem.c = *std::move(c_value);

  absl::StatusOr<const json*> uncertainty = Member(root, "uncertainty", "");
  if (!uncertainty.ok()) return uncertainty.status();
  absl::StatusOr<const json*> radius =
      Member(**uncertainty, "radius", "uncertainty");
  if (!radius.ok()) return radius.status();
  absl::StatusOr<double> radius_value =
      ReadNumber(**radius, "uncertainty.radius");
  if (!radius_value.ok()) return radius_value.status();
  problem.uncertainty.radius = *radius_value;

  absl::StatusOr<const json*> rows = Member(root, "rows", "");
  if (!rows.ok()) return rows.status();
  if (!(*rows)->is_array() || static_cast<int>((*rows)->size()) != m) {
    return FieldError("rows",
                      absl::StrCat("expected an array of m = ", m, " rows"));
  }
  problem.rows.reserve(m);
  for (int i = 0; i < m; ++i) {
    const json& entry = (**rows)[i];
    const std::string path = absl::StrCat("rows[", i, "]");
    ConstraintRow row;
    absl::StatusOr<const json*> field = Member(entry, "a", path);
    if (!field.ok()) return field.status();
    absl::StatusOr<Eigen::VectorXd> a = ReadVector(**field, path + ".a", n);
    if (!a.ok()) return a.status();
    row.a = *std::move(a);

    field = Member(entry, "A", path);
    if (!field.ok()) return field.status();
    absl::StatusOr<Eigen::MatrixXd> A = ReadMatrix(**field, path + ".A", n, l);
    if (!A.ok()) return A.status();
    row.A = *std::move(A);

    field = Member(entry, "b", path);
    if (!field.ok()) return field.status();
    absl::StatusOr<Eigen::VectorXd> b = ReadVector(**field, path + ".b", k);
    if (!b.ok()) return b.status();
    row.b = *std::move(b);

    field = Member(entry, "d0", path);
    if (!field.ok()) return field.status();
    absl::StatusOr<double> d0 = ReadNumber(**field, path + ".d0");
    if (!d0.ok()) return d0.status();
    row.d0 = *d0;

    field = Member(entry, "d", path);
    if (!field.ok()) return field.status();
    absl::StatusOr<Eigen::VectorXd> d = ReadVector(**field, path + ".d", l);
    if (!d.ok()) return d.status();
    row.d = *std::move(d);
    problem.rows.push_back(std::move(row));
  }

  if (auto it = root.find("w"); it != root.end() && !it->is_null()) {
    absl::StatusOr<Eigen::VectorXd> w = ReadVector(*it, "w", k);
    if (!w.ok()) return w.status();
    problem.w = *std::move(w);
  }
  if (auto it = root.find("cost_uncertainty");
      it != root.end() && !it->is_null()) {
    CostUncertainty cu;
    absl::StatusOr<const json*> field = Member(*it, "c0", "cost_uncertainty");
    if (!field.ok()) return field.status();
    absl::StatusOr<Eigen::VectorXd> c0 =
        ReadVector(**field, "cost_uncertainty.c0", n);
    if (!c0.ok()) return c0.status();
    cu.c0 = *std::move(c0);
    field = Member(*it, "rho", "cost_uncertainty");
    if (!field.ok()) return field.status();
    absl::StatusOr<double> rho = ReadNumber(**field, "cost_uncertainty.rho");
    if (!rho.ok()) return rho.status();
    cu.rho = *rho;
    problem.cost_uncertainty = std::move(cu);
  }
  return problem;
}

std::string ProblemToString(const AroProblem& problem) {
  return ProblemToJson(problem).dump(2) + "\n";
}

absl::StatusOr<AroProblem> ParseProblem(const std::string& text) {
  absl::StatusOr<json> root = ParseJson(text);
  if (!root.ok()) return root.status();
  return ProblemFromJson(*root);
}

absl::Status SaveProblem(const AroProblem& problem, const std::string& path) {
  return WriteFile(path, ProblemToString(problem));
}

absl::StatusOr<AroProblem> LoadProblem(const std::string& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<AroProblem> problem = ParseProblem(*text);
  if (!problem.ok()) {
    return absl::Status(problem.status().code(),
                        absl::StrCat(path, ": ", problem.status().message()));
  }
  return problem;
}

json RuleToJson(const QdrCoefficients& rule) {
  json out;
  out["theta"] = rule.theta;
  out["separable"] = rule.separable;
  out["y0"] = VectorToJson(rule.y0);
  out["W"] = MatrixToJson(rule.W);
  json q = json::array();
  for (const Eigen::MatrixXd& matrix : rule.Q)
    q.push_back(MatrixToJson(matrix));
  out["Q"] = std::move(q);
  return out;
}

absl::StatusOr<QdrCoefficients> RuleFromJson(const json& root) {
  QdrCoefficients rule;
  absl::StatusOr<const json*> field = Member(root, "theta", "rule");
  if (!field.ok()) return field.status();
  absl::StatusOr<double> theta = ReadNumber(**field, "rule.theta");
  if (!theta.ok()) return theta.status();
  rule.theta = *theta;
  if (auto it = root.find("separable"); it != root.end()) {
    if (!it->is_boolean()) return FieldError("rule.separable", "expected bool");
    rule.separable = it->get<bool>();
  }
  field = Member(root, "y0", "rule");
  if (!field.ok()) return field.status();
  if (!(*field)->is_array()) return FieldError("rule.y0", "expected an array");
  const Eigen::Index k = static_cast<Eigen::Index>((*field)->size());
  absl::StatusOr<Eigen::VectorXd> y0 = ReadVector(**field, "rule.y0", k);
  if (!y0.ok()) return y0.status();
  rule.y0 = *std::move(y0);

  field = Member(root, "W", "rule");
  if (!field.ok()) return field.status();
  const json& w = **field;
  Eigen::Index l = 0;
  if (w.is_array() && !w.empty() && w[0].is_array()) {
    l = static_cast<Eigen::Index>(w[0].size());
  }
  absl::StatusOr<Eigen::MatrixXd> W = ReadMatrix(w, "rule.W", k, l);
  if (!W.ok()) return W.status();
  rule.W = *std::move(W);

  field = Member(root, "Q", "rule");
  if (!field.ok()) return field.status();
  if (!(*field)->is_array() ||
      static_cast<Eigen::Index>((*field)->size()) != k) {
    return FieldError("rule.Q", absl::StrCat("expected ", k, " matrices"));
  }
  for (Eigen::Index j = 0; j < k; ++j) {
    absl::StatusOr<Eigen::MatrixXd> q =
        ReadMatrix((**field)[j], absl::StrCat("rule.Q[", j, "]"), l, l);
    if (!q.ok()) return q.status();
    rule.Q.push_back(*std::move(q));
  }
  if (auto diagnostics =
          ValidateRule(rule, static_cast<int>(k), static_cast<int>(l));
      !diagnostics.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid rule: ", FormatDiagnostics(diagnostics)));
  }
  return rule;
}

bool Policy::operator==(const Policy& other) const {
  return status == other.status && method == other.method &&
         solver == other.solver && objective == other.objective &&
         x.size() == other.x.size() &&
         (x.size() == 0 || (x.array() == other.x.array()).all()) &&
         rule == other.rule && tau == other.tau;
}

json PolicyToJson(const Policy& policy) {
  json out;
  out["version"] = kPolicySchemaVersion;
  out["status"] = policy.status;
  out["method"] = policy.method;
  out["solver"] = policy.solver;
  out["objective"] = policy.objective;
  out["x"] = VectorToJson(policy.x);
  out["rule"] = RuleToJson(policy.rule);
  if (policy.tau.has_value()) out["tau"] = *policy.tau;
  return out;
}

absl::StatusOr<Policy> PolicyFromJson(const json& root) {
  if (absl::Status status = CheckVersion(root, kPolicySchemaVersion);
      !status.ok()) {
    return status;
  }
  Policy policy;
  for (const char* key : {"status", "method", "solver"}) {
    absl::StatusOr<const json*> field = Member(root, key, "");
    if (!field.ok()) return field.status();
    if (!(*field)->is_string()) return FieldError(key, "expected a string");
    std::string value = (*field)->get<std::string>();
    if (std::string(key) == "status") policy.status = std::move(value);
    if (std::string(key) == "method") policy.method = std::move(value);
    if (std::string(key) == "solver") policy.solver = std::move(value);
  }
  absl::StatusOr<const json*> field = Member(root, "objective", "");
  if (!field.ok()) return field.status();
  absl::StatusOr<double> objective = ReadNumber(**field, "objective");
  if (!objective.ok()) return objective.status();
  policy.objective = *objective;

  field = Member(root, "x", "");
  if (!field.ok()) return field.status();
  if (!(*field)->is_array()) return FieldError("x", "expected an array");
  absl::StatusOr<Eigen::VectorXd> x =
      ReadVector(**field, "x", static_cast<Eigen::Index>((*field)->size()));
  if (!x.ok()) return x.status();
  policy.x = *std::move(x);

  field = Member(root, "rule", "");
  if (!field.ok()) return field.status();
  absl::StatusOr<QdrCoefficients> rule = RuleFromJson(**field);
  if (!rule.ok()) return rule.status();
  policy.rule = *std::move(rule);

  if (auto it = root.find("tau"); it != root.end() && !it->is_null()) {
    absl::StatusOr<double> tau = ReadNumber(*it, "tau");
    if (!tau.ok()) return tau.status();
    policy.tau = *tau;
  }
  return policy;
}

absl::Status SavePolicy(const Policy& policy, const std::string& path) {
  return WriteFile(path, PolicyToJson(policy).dump(2) + "\n");
}

absl::StatusOr<Policy> LoadPolicy(const std::string& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<json> root = ParseJson(*text);
  if (!root.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path, ": ", root.status().message()));
  }
  absl::StatusOr<Policy> policy = PolicyFromJson(*root);
  if (!policy.ok()) {
    return absl::Status(policy.status().code(),
                        absl::StrCat(path, ": ", policy.status().message()));
  }
  return policy;
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::Status WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
  out << contents;
  if (!out) return absl::DataLossError(absl::StrCat("short write to ", path));
  return absl::OkStatus();
}

}  // namespace aroqdr
