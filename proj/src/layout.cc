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

#include "aroqdr/layout.h"

#include <utility>

#include "absl/strings/str_cat.h"

namespace aroqdr {
namespace {

// Lays out x, y0, W and returns the next free offset.
int PlaceCommon(LayoutBase& base, int n, int k, int l) {
  base.n = n;
  base.k = k;
  base.l = l;
  base.x_offset = 0;
  base.y0_offset = n;
  base.w_offset = n + k;
  return n + k + k * l;
}

int PlaceTaus(LayoutBase& base, int next, bool has_tau, bool has_cost_tau) {
  if (has_tau) base.tau_offset = next++;
  if (has_cost_tau) base.cost_tau_offset = next++;
  return next;
}

}  // namespace

int SdpLayout::Q(int j, int p, int q) const {
  if (p > q) std::swap(p, q);
  if (diagonal_q) return p == q ? q_offset + j * l + p : -1;
  const int packed = p * l - p * (p - 1) / 2 + (q - p);
  return q_offset + j * QBlockSize() + packed;
}

SdpLayout MakeSdpLayout(int n, int k, int l, int num_groups, double theta,
                        bool has_tau, bool has_cost_tau, bool diagonal_q) {
  SdpLayout layout;
  layout.theta = theta;
  layout.diagonal_q = diagonal_q;
  int next = PlaceCommon(layout, n, k, l);
  layout.q_offset = next;
  next += k * layout.QBlockSize();
  layout.lambda_offset = next;
  layout.num_groups = num_groups;
  next += num_groups;
  layout.total = PlaceTaus(layout, next, has_tau, has_cost_tau);
  return layout;
}

SocpLayout MakeSocpLayout(int n, int k, int l, int num_groups, double theta,
                          bool has_tau, bool has_cost_tau) {
  SocpLayout layout;
  layout.theta = theta;
  int next = PlaceCommon(layout, n, k, l);
  layout.q_offset = next;
  next += l * k;
  layout.lambda_offset = next;
  layout.num_groups = num_groups;
  next += num_groups;
  layout.s_offset = next;
  next += l * num_groups;
  layout.total = PlaceTaus(layout, next, has_tau, has_cost_tau);
  return layout;
}

AdrLayout MakeAdrLayout(int n, int k, int l, bool has_tau, bool has_cost_tau) {
  AdrLayout layout;
  layout.theta = 1.0;
  const int next = PlaceCommon(layout, n, k, l);
  layout.total = PlaceTaus(layout, next, has_tau, has_cost_tau);
  return layout;
}

const LayoutBase& Base(const RuleLayout& layout) {
  return std::visit(
      [](const auto& typed) -> const LayoutBase& { return typed; }, layout);
}

std::string LayoutKindName(const RuleLayout& layout) {
  switch (layout.index()) {
    case 0:
      return "sdp";
    case 1:
      return "socp";
    default:
      return "adr";
  }
}

std::string VariableName(const RuleLayout& layout, int index) {
  const LayoutBase& base = Base(layout);
  if (index < 0 || index >= base.total) return absl::StrCat("v", index);
  if (index == base.tau_offset) return "tau";
  if (index == base.cost_tau_offset) return "cost_tau";
  if (index < base.y0_offset) return absl::StrCat("x[", index, "]");
  if (index < base.w_offset) {
    return absl::StrCat("y0[", index - base.y0_offset, "]");
  }
  const int w_end = base.w_offset + base.k * base.l;
  if (index < w_end) {
    const int offset = index - base.w_offset;
    return absl::StrCat("W[", offset / base.l, ",", offset % base.l, "]");
  }
  if (const auto* sdp = std::get_if<SdpLayout>(&layout)) {
    if (index < sdp->lambda_offset) {
      const int offset = index - sdp->q_offset;
      const int j = offset / sdp->QBlockSize();
      int packed = offset % sdp->QBlockSize();
      if (sdp->diagonal_q) {
        return absl::StrCat("Q[", j, "][", packed, ",", packed, "]");
      }
      int p = 0;
      while (packed >= sdp->l - p) {
        packed -= sdp->l - p;
        ++p;
      }
      return absl::StrCat("Q[", j, "][", p, ",", p + packed, "]");
    }
    return absl::StrCat("lambda[", index - sdp->lambda_offset, "]");
  }
  if (const auto* socp = std::get_if<SocpLayout>(&layout)) {
    if (index < socp->lambda_offset) {
      const int offset = index - socp->q_offset;
      return absl::StrCat("q[", offset % socp->l, ",", offset / socp->l, "]");
    }
    if (index < socp->s_offset) {
      return absl::StrCat("lambda[", index - socp->lambda_offset, "]");
    }
    const int offset = index - socp->s_offset;
    return absl::StrCat("s[", offset % socp->l, ",", offset / socp->l, "]");
  }
  return absl::StrCat("v", index);
}

}  // namespace aroqdr
