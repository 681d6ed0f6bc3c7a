// Copyright 2026 The dqirc developers
//
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

#pragma once
#include <string>
#include <utility>
#include <vector>

#include "dqir/functions.hpp"
#include "dqir/operator_poly.hpp"

namespace dqir {

/// Max-style graph coloring recast as minimization: count equal-colored
/// adjacent nodes.
struct ColoringInstance {
  int num_nodes = 0;
  int num_colors = 0;  // d
  std::vector<std::pair<int, int>> edges;
};

/// Round-trip routing over M cities with a symmetric distance matrix.
struct TspInstance {
  int num_cities = 0;                       // M
  std::vector<std::vector<double>> dist;    // M x M, symmetric
};

/// Single-machine scheduling: minimize total (weighted) lateness.
struct SmsInstance {
  std::vector<double> processing;  // p_k
  std::vector<double> deadline;    // d_k
  std::vector<double> weight;      // w_k
};

/// Portfolio rebalancing over M three-level lots {long, no-hold, short} ->
/// {0, 1, 2}, i.e. z in {-1, 0, +1}.
struct PortfolioInstance {
  double lambda = 0.5;                      // risk weight, in [0,1]
  std::vector<std::vector<double>> sigma;   // M x M covariance
  std::vector<double> mu;                   // returns
  std::vector<int> prev_position;           // y, entries in {-1,0,+1}
  double trade_cost = 0.0;                  // T
  int target = 0;                           // D, sum(z) constraint
};

/// Canonical integer linear program: maximize c.x subject to A x <= b,
/// 0 <= x_a < d_a. The cost operator carries +c.x; the maximization sense
/// is reported alongside, constraints are delegated to penalties.
struct IlpInstance {
  std::vector<std::vector<double>> a;  // rows of A
  std::vector<double> b;
  std::vector<double> c;
  std::vector<int> dims;  // d_a per variable
};

DomainSpec coloring_domain(const ColoringInstance& inst);
DomainSpec tsp_domain(const TspInstance& inst);
DomainSpec sms_domain(const SmsInstance& inst);
DomainSpec portfolio_domain(const PortfolioInstance& inst);
DomainSpec ilp_domain(const IlpInstance& inst);

/// H_C = sum over edges of EQ(x_u, x_v).
OperatorPoly coloring_cost(const ColoringInstance& inst);

/// Eigenvalue on a permutation state equals the closed tour length.
OperatorPoly tsp_cost(const TspInstance& inst);

/// Total weighted lateness sum_k w_k (s_k + p_k - d_k) on permutation
/// states. `weighted=false` drops the job weights.
OperatorPoly sms_cost(const SmsInstance& inst, bool weighted = true);

/// Returns (cost = C_RR + C_TC, constraint-left-side sum_a A^z_a).
std::pair<OperatorPoly, OperatorPoly> portfolio_cost(
    const PortfolioInstance& inst);

/// Eigenvalue c.x on basis states.
OperatorPoly ilp_cost(const IlpInstance& inst);

/// Diagonal projector with eigenvalues in {0,1}.
struct FeasibilityProjector {
  OperatorPoly op;
  /// Basis-state indices of the feasible set (domain tuple order indices).
  std::vector<std::int64_t> feasible_states;
};

/// Identity: no hard constraints beyond validity.
FeasibilityProjector all_valid_projector(const DomainSpec& domain);

/// Projector onto permutation strings; requires d == M for every variable.
FeasibilityProjector permutation_projector(const DomainSpec& domain);

/// Projector onto states with sum_a coeffs[x_a] == target (within 1e-9).
FeasibilityProjector sum_projector(const DomainSpec& domain,
                                   const std::vector<cxd>& level_coeffs,
                                   double target);

}  // namespace dqir
