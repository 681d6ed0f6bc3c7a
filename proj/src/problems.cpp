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

#include "dqir/problems.hpp"

#include <algorithm>
#include <cmath>

namespace dqir {

namespace {
std::string node_var(int i) { return "x" + std::to_string(i); }
}  // namespace

DomainSpec coloring_domain(const ColoringInstance& inst) {
  if (inst.num_nodes < 1) throw ContractError("coloring: no nodes");
  if (inst.num_colors < 2) throw ContractError("coloring: need d >= 2");
  return DomainSpec::uniform(inst.num_nodes, inst.num_colors);
}

OperatorPoly coloring_cost(const ColoringInstance& inst) {
  const auto dom = coloring_domain(inst);
  OperatorPoly h(dom);
  for (const auto& [u, v] : inst.edges) {
    if (u < 0 || u >= inst.num_nodes || v < 0 || v >= inst.num_nodes)
      throw ContractError("coloring: edge references unknown node");
    if (u == v) throw ContractError("coloring: self-loop edge");
    h = h + eq_op(dom, node_var(u), node_var(v));
  }
  return h;
}

DomainSpec tsp_domain(const TspInstance& inst) {
  if (inst.num_cities < 2) throw ContractError("tsp: need M >= 2");
  return DomainSpec::uniform(inst.num_cities, inst.num_cities);
}

OperatorPoly tsp_cost(const TspInstance& inst) {
  const int m = inst.num_cities;
  if (static_cast<int>(inst.dist.size()) != m)
    throw ContractError("tsp: distance matrix must be M x M");
  for (const auto& row : inst.dist)
    if (static_cast<int>(row.size()) != m)
      throw ContractError("tsp: distance matrix must be M x M");
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < k; ++l)
      if (std::abs(inst.dist[k][l] - inst.dist[l][k]) > 1e-12)
        throw ContractError(
            "tsp: asymmetric distance matrix (asymmetric TSP unsupported)");

  const auto dom = tsp_domain(inst);
  OperatorPoly h(dom);
  // Both travel directions of each leg, so that any permutation state is
  // assigned its full closed tour length.
  for (int a = 0; a < m; ++a) {
    const std::string va = node_var(a);
    const std::string vb = node_var((a + 1) % m);
    for (int k = 0; k < m; ++k)
      for (int l = 0; l < m; ++l) {
        if (k == l || inst.dist[k][l] == 0.0) continue;
        OperatorPoly term =
            indicator(dom, va, k) * indicator(dom, vb, l);
        h = h + cxd{inst.dist[k][l], 0.0} * term;
      }
  }
  return h;
}

DomainSpec sms_domain(const SmsInstance& inst) {
  const int m = static_cast<int>(inst.processing.size());
  if (m < 1) throw ContractError("sms: no jobs");
  if (inst.deadline.size() != inst.processing.size() ||
      inst.weight.size() != inst.processing.size())
    throw ContractError("sms: array lengths differ");
  // Position variables take job ids as values; a single job still needs a
  // two-level variable to be representable.
  return DomainSpec::uniform(m, std::max(m, 2));
}

OperatorPoly sms_cost(const SmsInstance& inst, bool weighted) {
  const int m = static_cast<int>(inst.processing.size());
  const auto dom = sms_domain(inst);
  const int d = dom.variables().front().dim;

  auto proc_value = [&](const std::string& var) {
    std::vector<cxd> diag(d, 0.0);
    for (int k = 0; k < m; ++k) diag[k] = inst.processing[k];
    return value_op(dom, var, diag);
  };

  OperatorPoly h(dom);
  // Start times: job k at position a starts after all earlier positions'
  // processing.
  for (int k = 0; k < m; ++k) {
    const double w = weighted ? inst.weight[k] : 1.0;
    for (int a = 1; a < m; ++a) {
      OperatorPoly preceding(dom);
      for (int b = 0; b < a; ++b)
        preceding = preceding + proc_value(node_var(b));
      h = h + cxd{w, 0.0} * (indicator(dom, node_var(a), k) * preceding);
    }
  }
  // Completion minus deadline, weighted per job.
  std::vector<cxd> tail(d, 0.0);
  for (int k = 0; k < m; ++k) {
    const double w = weighted ? inst.weight[k] : 1.0;
    tail[k] = w * (inst.processing[k] - inst.deadline[k]);
  }
  for (int a = 0; a < m; ++a) h = h + value_op(dom, node_var(a), tail);
  return h.simplified();
}

DomainSpec portfolio_domain(const PortfolioInstance& inst) {
  const int m = static_cast<int>(inst.mu.size());
  if (m < 1) throw ContractError("portfolio: no lots");
  return DomainSpec::uniform(m, 3, "z");
}

std::pair<OperatorPoly, OperatorPoly> portfolio_cost(
    const PortfolioInstance& inst) {
  const int m = static_cast<int>(inst.mu.size());
  if (inst.lambda < 0.0 || inst.lambda > 1.0)
    throw ContractError("portfolio: lambda must be in [0,1]");
  if (static_cast<int>(inst.sigma.size()) != m)
    throw ContractError("portfolio: sigma must be M x M");
  for (const auto& row : inst.sigma)
    if (static_cast<int>(row.size()) != m)
      throw ContractError("portfolio: sigma must be M x M");
  if (static_cast<int>(inst.prev_position.size()) != m)
    throw ContractError("portfolio: previous position length != M");

  const auto dom = portfolio_domain(inst);
  const std::vector<cxd> z_diag{-1.0, 0.0, 1.0};
  auto zvar = [&](int a) { return "z" + std::to_string(a); };
  auto z_op = [&](int a) { return value_op(dom, zvar(a), z_diag); };

  OperatorPoly cost(dom);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      cost = cost +
             cxd{inst.lambda * inst.sigma[a][b], 0.0} * (z_op(a) * z_op(b));
  for (int a = 0; a < m; ++a)
    cost = cost - cxd{(1.0 - inst.lambda) * inst.mu[a], 0.0} * z_op(a);

  for (int a = 0; a < m; ++a) {
    const int y = inst.prev_position[a];
    if (y < -1 || y > 1)
      throw ContractError("portfolio: previous position must be in {-1,0,+1}");
    const OperatorPoly hold = indicator(dom, zvar(a), y + 1);
    cost = cost + cxd{inst.trade_cost, 0.0} *
                      (OperatorPoly::identity(dom) - hold);
  }

  OperatorPoly constraint(dom);
  for (int a = 0; a < m; ++a) constraint = constraint + z_op(a);
  return {cost.simplified(), constraint.simplified()};
}

DomainSpec ilp_domain(const IlpInstance& inst) {
  const int n = static_cast<int>(inst.dims.size());
  if (n < 1) throw ContractError("ilp: no variables");
  std::vector<Variable> vars;
  for (int i = 0; i < n; ++i) vars.push_back({node_var(i), inst.dims[i]});
  return DomainSpec(std::move(vars));
}

OperatorPoly ilp_cost(const IlpInstance& inst) {
  if (inst.c.size() != inst.dims.size())
    throw ContractError("ilp: objective length != variable count");
  for (const auto& row : inst.a)
    if (row.size() != inst.dims.size())
      throw ContractError("ilp: constraint row length != variable count");
  const auto dom = ilp_domain(inst);
  OperatorPoly h(dom);
  for (std::size_t i = 0; i < inst.c.size(); ++i)
    h = h + cxd{inst.c[i], 0.0} * number_op(dom, node_var(static_cast<int>(i)));
  return h;
}

FeasibilityProjector all_valid_projector(const DomainSpec& domain) {
  FeasibilityProjector fp{OperatorPoly::identity(domain), {}};
  const std::int64_t n = domain.state_count();
  fp.feasible_states.reserve(n);
  for (std::int64_t s = 0; s < n; ++s) fp.feasible_states.push_back(s);
  return fp;
}

FeasibilityProjector permutation_projector(const DomainSpec& domain) {
  const int m = static_cast<int>(domain.size());
  for (const auto& v : domain.variables())
    if (v.dim != m)
      throw ContractError(
          "permutation_projector: every variable must have d == M");

  FeasibilityProjector fp{OperatorPoly(domain), {}};
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  do {
    ProductTerm t;
    for (int i = 0; i < m; ++i)
      t.factors.emplace(domain.variables()[i].id,
                        LocalFactor::indicator(m, perm[i]));
    fp.op.terms().push_back(std::move(t));
    fp.feasible_states.push_back(domain.state_index(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(fp.feasible_states.begin(), fp.feasible_states.end());
  fp.op = fp.op.simplified();
  return fp;
}

FeasibilityProjector sum_projector(const DomainSpec& domain,
                                   const std::vector<cxd>& level_coeffs,
                                   double target) {
  const std::int64_t n = domain.state_count();
  if (n > kDenseDimCap)
    throw DimensionCapError("sum_projector: domain too large to enumerate");
  FeasibilityProjector fp{OperatorPoly(domain), {}};
  for (std::int64_t s = 0; s < n; ++s) {
    const auto tup = domain.state_tuple(s);
    cxd sum{0.0, 0.0};
    for (std::size_t i = 0; i < tup.size(); ++i) {
      if (tup[i] >= static_cast<int>(level_coeffs.size()))
        throw ContractError("sum_projector: coefficient list too short");
      sum += level_coeffs[tup[i]];
    }
    if (std::abs(sum - cxd{target, 0.0}) > kBooleanTol) continue;
    ProductTerm t;
    for (std::size_t i = 0; i < tup.size(); ++i) {
      const auto& v = domain.variables()[i];
      t.factors.emplace(v.id, LocalFactor::indicator(v.dim, tup[i]));
    }
    fp.op.terms().push_back(std::move(t));
    fp.feasible_states.push_back(s);
  }
  fp.op = fp.op.simplified();
  return fp;
}

}  // namespace dqir
