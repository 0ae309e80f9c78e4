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

#include "aroqdr/extract.h"

#include <algorithm>
#include <variant>

#include "absl/strings/str_cat.h"

namespace aroqdr {
namespace {

void UnpackCommon(const LayoutBase& base, const Eigen::VectorXd& values,
                  ExtractedPolicy& policy) {
  policy.x = values.segment(base.x_offset, base.n);
  policy.rule.y0 = values.segment(base.y0_offset, base.k);
  policy.rule.W.resize(base.k, base.l);
  for (int j = 0; j < base.k; ++j) {
    for (int p = 0; p < base.l; ++p) policy.rule.W(j, p) = values(base.W(j, p));
  }
  if (base.has_tau()) policy.tau = values(base.tau_offset);
  if (base.has_cost_tau()) policy.cost_tau = values(base.cost_tau_offset);
}

}  // namespace

absl::StatusOr<ExtractedPolicy> ExtractRule(const Eigen::VectorXd& values,
                                            const RuleLayout& layout) {
  const LayoutBase& base = Base(layout);
  if (values.size() < base.total) {
    return absl::InvalidArgumentError(
        absl::StrCat("solution has ", values.size(), " values but the ",
                     LayoutKindName(layout), " layout needs ", base.total));
  }
  ExtractedPolicy policy;
  policy.rule.theta = base.theta;
  UnpackCommon(base, values, policy);
  policy.rule.Q.assign(base.k, Eigen::MatrixXd::Zero(base.l, base.l));

  if (const auto* sdp = std::get_if<SdpLayout>(&layout)) {
    policy.rule.separable = sdp->diagonal_q;
    for (int j = 0; j < base.k; ++j) {
      for (int p = 0; p < base.l; ++p) {
        for (int q = p; q < base.l; ++q) {
          const int var = sdp->Q(j, p, q);
          if (var < 0) continue;
          policy.rule.Q[j](p, q) = values(var);
          policy.rule.Q[j](q, p) = values(var);
        }
      }
    }
    policy.lambda = values.segment(sdp->lambda_offset, sdp->num_groups);
  } else if (const auto* socp = std::get_if<SocpLayout>(&layout)) {
    policy.rule.separable = true;
    for (int j = 0; j < base.k; ++j) {
      for (int p = 0; p < base.l; ++p) {
        policy.rule.Q[j](p, p) = values(socp->q(p, j));
      }
    }
    policy.lambda = values.segment(socp->lambda_offset, socp->num_groups);
  } else {
    policy.rule.theta = 1.0;
  }
  return policy;
}

absl::StatusOr<ExtractedPolicy> ExtractRule(const Solution& solution,
                                            const RuleLayout& layout) {
  if (solution.status != SolveStatus::kOptimal) {
    return absl::FailedPreconditionError(
        absl::StrCat("cannot extract a rule from a solution with status ",
                     std::string(SolveStatusName(solution.status))));
  }
  return ExtractRule(solution.values, layout);
}

absl::StatusOr<Eigen::VectorXd> PackRule(const RuleLayout& layout,
                                         const Eigen::VectorXd& x,
                                         const QdrCoefficients& rule) {
  const LayoutBase& base = Base(layout);
  if (x.size() != base.n || rule.k() != base.k || rule.l() != base.l ||
      static_cast<int>(rule.Q.size()) != base.k) {
    return absl::InvalidArgumentError(
        absl::StrCat("policy shape (n=", x.size(), ", k=", rule.k(),
                     ", l=", rule.l(), ") does not match layout (n=", base.n,
                     ", k=", base.k, ", l=", base.l, ")"));
  }
  Eigen::VectorXd values = Eigen::VectorXd::Zero(base.total);
  values.segment(base.x_offset, base.n) = x;
  values.segment(base.y0_offset, base.k) = rule.y0;
  for (int j = 0; j < base.k; ++j) {
    for (int p = 0; p < base.l; ++p) values(base.W(j, p)) = rule.W(j, p);
  }
  if (const auto* sdp = std::get_if<SdpLayout>(&layout)) {
    for (int j = 0; j < base.k; ++j) {
      for (int p = 0; p < base.l; ++p) {
        for (int q = p; q < base.l; ++q) {
          const int var = sdp->Q(j, p, q);
          if (var >= 0) values(var) = rule.Q[j](p, q);
        }
      }
    }
  } else if (const auto* socp = std::get_if<SocpLayout>(&layout)) {
    for (int j = 0; j < base.k; ++j) {
      for (int p = 0; p < base.l; ++p) values(socp->q(p, j)) = rule.Q[j](p, p);
    }
  }
  return values;
}

ProgramStats ComputeProgramStats(const ConicProgram& program) {
  ProgramStats stats;
  stats.total_vars = program.num_vars;
  for (const ConeConstraint& row : program.rows) {
    ++stats.row_counts[std::string(ConeKindName(row.kind))];
    if (row.kind == ConeKind::kPsd) {
      stats.psd_max_side = std::max(stats.psd_max_side, row.side);
    } else if (row.kind == ConeKind::kSecondOrder) {
      stats.soc_max_dim = std::max(stats.soc_max_dim, row.dim());
    }
  }
  if (!program.layout.has_value()) {
    stats.layout_kind = "none";
    stats.rule_dim = program.num_vars;
    return stats;
  }
  const RuleLayout& layout = *program.layout;
  const LayoutBase& base = Base(layout);
  stats.layout_kind = LayoutKindName(layout);
  const int affine_part = base.n + base.k + base.k * base.l;
  if (const auto* sdp = std::get_if<SdpLayout>(&layout)) {
    stats.rule_dim = affine_part + base.k * sdp->QBlockSize();
  } else if (const auto* socp = std::get_if<SocpLayout>(&layout)) {
    const int groups = socp->num_groups;
    stats.rule_dim = affine_part + groups + 2 * groups * base.l;
  } else {
    stats.rule_dim = affine_part;
  }
  return stats;
}

}  // namespace aroqdr
