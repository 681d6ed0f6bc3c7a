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

#include "dqir/functions.hpp"

#include <algorithm>
#include <set>

namespace dqir {

bool is_boolean_valued(const OperatorPoly& f, std::int64_t state_cap) {
  if (!f.is_diagonal()) return false;
  const auto n = f.domain().state_count();
  if (n > state_cap) return true;  // structural check only
  for (std::int64_t s = 0; s < n; ++s) {
    const cxd v = f.eval_diagonal(f.domain().state_tuple(s));
    if (std::abs(v.imag()) > kBooleanTol) return false;
    if (std::abs(v.real()) > kBooleanTol &&
        std::abs(v.real() - 1.0) > kBooleanTol)
      return false;
  }
  return true;
}

OperatorPoly compose_bool(BoolConnective op, const OperatorPoly& f,
                          const OperatorPoly& g, cxd a, cxd b) {
  const auto& dom = f.domain();
  const auto I = OperatorPoly::identity(dom);
  if (op == BoolConnective::Linear) {
    if (g.domain().size() == 0) return (a * f).simplified();
    return a * f + b * g;
  }
  if (!is_boolean_valued(f))
    throw ContractError("compose_bool: first operand is not {0,1}-valued");
  if (op == BoolConnective::Not) return I - f;
  if (!is_boolean_valued(g))
    throw ContractError("compose_bool: second operand is not {0,1}-valued");
  switch (op) {
    case BoolConnective::And:
      return f * g;
    case BoolConnective::Or:
      return f + g - f * g;
    case BoolConnective::Xor:
      return f + g - cxd{2.0, 0.0} * (f * g);
    case BoolConnective::Implies:
      return I - f + f * g;
    default:
      throw ContractError("compose_bool: unknown connective");
  }
}

OperatorPoly eq_op(const DomainSpec& domain, const std::string& alpha,
                   const std::string& beta) {
  if (alpha == beta) throw ContractError("eq_op: variables must differ");
  const int d = std::min(domain.dim_of(alpha), domain.dim_of(beta));
  OperatorPoly out(domain);
  for (int k = 0; k < d; ++k)
    out = out + indicator(domain, alpha, k) * indicator(domain, beta, k);
  return out;
}

OperatorPoly neq_op(const DomainSpec& domain, const std::string& alpha,
                    const std::string& beta) {
  return OperatorPoly::identity(domain) - eq_op(domain, alpha, beta);
}

OperatorPoly aeq_op(const DomainSpec& domain,
                    const std::vector<std::string>& vars) {
  if (vars.size() < 2) throw ContractError("aeq_op: need >= 2 variables");
  int d = domain.dim_of(vars[0]);
  for (const auto& v : vars) d = std::min(d, domain.dim_of(v));
  OperatorPoly out(domain);
  for (int k = 0; k < d; ++k) {
    OperatorPoly t = OperatorPoly::identity(domain);
    for (const auto& v : vars) t = t * indicator(domain, v, k);
    out = out + t;
  }
  return out;
}

OperatorPoly ad_op(const DomainSpec& domain,
                   const std::vector<std::string>& vars) {
  if (vars.size() < 2) throw ContractError("ad_op: need >= 2 variables");
  // (I - EQ) is a projector and the factors commute, so the product over
  // unordered pairs equals the product over ordered pairs.
  OperatorPoly out = OperatorPoly::identity(domain);
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      out = out * neq_op(domain, vars[i], vars[j]);
  return out;
}

OperatorPoly cnz_op(const DomainSpec& domain,
                    const std::vector<std::string>& vars) {
  OperatorPoly out = OperatorPoly::constant(
      domain, static_cast<double>(vars.size()));
  for (const auto& v : vars) out = out - indicator(domain, v, 0);
  return out;
}

OperatorPoly pd_op(const DomainSpec& domain,
                   const std::vector<std::pair<std::string, std::string>>& edges) {
  OperatorPoly out(domain);
  for (const auto& [u, v] : edges) {
    if (!domain.has(u) || !domain.has(v))
      throw ContractError("pd_op: edge references unknown variable");
    out = out + neq_op(domain, u, v);
  }
  return out;
}

OperatorPoly controlled_generator(const OperatorPoly& f,
                                  const OperatorPoly& target) {
  if (!(f.domain() == target.domain()))
    throw ContractError("controlled_generator: operands on different domains");
  const auto fs = f.support();
  const auto ts = target.support();
  std::set<std::string> fset(fs.begin(), fs.end());
  for (const auto& v : ts)
    if (fset.count(v))
      throw ContractError(
          "controlled_generator: control and target share variable '" + v +
          "'");
  if (!is_boolean_valued(f))
    throw ContractError("controlled_generator: control is not {0,1}-valued");
  return f * target;
}

OperatorPoly transposition_generator(const DomainSpec& domain,
                                     const std::string& var, int k, int l) {
  return transfer(domain, var, k, l, /*symmetric=*/true) -
         OperatorPoly::identity(domain);
}

}  // namespace dqir
