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

// Variable layouts map conic-program variable indices back to the decision
// tuple (x, y0, W, Q, lambda, s, tau). Every layout stores its blocks
// contiguously in the order x, y0, W, Q|q, lambda, s, tau, cost_tau.

#ifndef AROQDR_LAYOUT_H_
#define AROQDR_LAYOUT_H_

#include <string>
#include <variant>

namespace aroqdr {

struct LayoutBase {
  int n = 0;
  int k = 0;
  int l = 0;
  double theta = 1.0;
  int x_offset = 0;
  int y0_offset = 0;
  int w_offset = 0;
  int tau_offset = -1;       // epigraph of the adjustable cost row
  int cost_tau_offset = -1;  // epigraph of c0'x + rho |x|
  int total = 0;

  int x(int i) const { return x_offset + i; }
  int y0(int j) const { return y0_offset + j; }
  int W(int j, int p) const { return w_offset + j * l + p; }
  bool has_tau() const { return tau_offset >= 0; }
  bool has_cost_tau() const { return cost_tau_offset >= 0; }
};

// General QDR reformulated as an SDP. Q_j is stored as its upper triangle
// (row-major, plain entries), or only its diagonal when diagonal_q is set.
struct SdpLayout : LayoutBase {
  bool diagonal_q = false;
  int q_offset = 0;
  int lambda_offset = 0;
  int num_groups = 0;  // m, or m + 1 with an adjustable cost row

  int QBlockSize() const { return diagonal_q ? l : l * (l + 1) / 2; }
  // Variable holding (Q_j)_{pq} = (Q_j)_{qp}; -1 for off-diagonal entries of
  // a diagonal layout.
  int Q(int j, int p, int q) const;
  int lambda(int g) const { return lambda_offset + g; }
};

// Separable QDR reformulated as an SOCP. q(p, j) is the p-th diagonal entry
// of Q_j. sigma_{p,g} is an affine function of q and has no slot of its own.
struct SocpLayout : LayoutBase {
  int q_offset = 0;
  int lambda_offset = 0;
  int s_offset = 0;
  int num_groups = 0;

  int q(int p, int j) const { return q_offset + j * l + p; }
  int lambda(int g) const { return lambda_offset + g; }
  int s(int p, int g) const { return s_offset + g * l + p; }
};

// Affine decision rule y0 + W z solved through its classical SOC counterpart.
struct AdrLayout : LayoutBase {};

using RuleLayout = std::variant<SdpLayout, SocpLayout, AdrLayout>;

SdpLayout MakeSdpLayout(int n, int k, int l, int num_groups, double theta,
                        bool has_tau, bool has_cost_tau, bool diagonal_q);
SocpLayout MakeSocpLayout(int n, int k, int l, int num_groups, double theta,
                          bool has_tau, bool has_cost_tau);
AdrLayout MakeAdrLayout(int n, int k, int l, bool has_tau, bool has_cost_tau);

const LayoutBase& Base(const RuleLayout& layout);
std::string LayoutKindName(const RuleLayout& layout);
// Name of variable `index`, e.g. "x[0]", "W[1,0]", "Q[2][0,1]", "s[1,3]".
std::string VariableName(const RuleLayout& layout, int index);

}  // namespace aroqdr

#endif  // AROQDR_LAYOUT_H_
