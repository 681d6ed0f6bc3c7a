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

#include "dqir/penalties.hpp"

#include <algorithm>
#include <cmath>

namespace dqir {

OperatorPoly f_perm(const DomainSpec& domain) {
  const auto& vars = domain.variables();
  if (vars.size() < 2) return OperatorPoly(domain);
  const int d = vars.front().dim;
  for (const auto& v : vars)
    if (v.dim != d)
      throw ContractError("f_perm: variables must share one cardinality");
  OperatorPoly out(domain);
  for (std::size_t a = 0; a < vars.size(); ++a)
    for (std::size_t b = 0; b < vars.size(); ++b) {
      if (a == b) continue;
      for (int k = 0; k < d; ++k) {
        ProductTerm t;
        t.factors.emplace(vars[a].id, LocalFactor::indicator(d, k));
        t.factors.emplace(vars[b].id, LocalFactor::indicator(d, k));
        out.terms().push_back(std::move(t));
      }
    }
  return out.simplified();
}

OperatorPoly f_sum(const DomainSpec& domain,
                   const std::vector<cxd>& level_coeffs, double target) {
  OperatorPoly sum = OperatorPoly::constant(domain, -target);
  for (const auto& v : domain.variables()) {
    if (static_cast<int>(level_coeffs.size()) != v.dim)
      throw ContractError("f_sum: coefficient list length != d of '" + v.id +
                          "'");
    sum = sum + value_op(domain, v.id, level_coeffs);
  }
  return (sum * sum).simplified();
}

OperatorPoly f_lin(const DomainSpec& domain,
                   const std::map<std::string, double>& row, double bound,
                   int support_cap) {
  std::vector<std::string> support;
  for (const auto& [var, coeff] : row) {
    if (!domain.has(var))
      throw ContractError("f_lin: row references unknown variable '" + var +
                          "'");
    if (coeff != 0.0) support.push_back(var);
  }
  if (static_cast<int>(support.size()) > support_cap)
    throw ContractError(
        "f_lin: row touches " + std::to_string(support.size()) +
        " variables, above the cap of " + std::to_string(support_cap) +
        "; the encoded term count grows exponentially with the row support"
        " (consider a slack-variable reformulation)");

  OperatorPoly out(domain);
  std::vector<int> dims, x;
  for (const auto& var : support) dims.push_back(domain.dim_of(var));
  x.assign(support.size(), 0);

  // Mixed-radix enumeration of all assignments of the row's support.
  while (true) {
    double lhs = 0.0;
    for (std::size_t i = 0; i < support.size(); ++i)
      lhs += row.at(support[i]) * x[i];
    if (lhs > bound + 1e-12) {
      ProductTerm t;
      for (std::size_t i = 0; i < support.size(); ++i)
        t.factors.emplace(support[i], LocalFactor::indicator(dims[i], x[i]));
      out.terms().push_back(std::move(t));
    }
    std::size_t i = 0;
    for (; i < x.size(); ++i) {
      if (++x[i] < dims[i]) break;
      x[i] = 0;
    }
    if (i == x.size()) break;
  }
  return out.simplified();
}

PauliPoly f_ss(const std::string& var, const EncodingAssignment& assignment,
               bool allow_sparse) {
  const int d = assignment.domain().dim_of(var);
  const CodeSpec& code = assignment.code_of(var);
  const int offset = assignment.offset_of(var);
  const int width = assignment.register_width(var);
  PauliPoly out(assignment.total_qubits());

  auto projector_term = [&](std::uint32_t word) {
    // |word><word| over the register as a Pauli sum.
    for (std::uint32_t sel = 0; sel < (1u << width); ++sel) {
      PauliTerm t;
      t.coeff = 1.0;
      for (int q = 0; q < width; ++q) {
        t.coeff *= 0.5;
        if ((sel >> q) & 1u) {
          if ((word >> q) & 1u) t.coeff = -t.coeff;
          t.ops[offset + q] = 'Z';
        }
      }
      out.terms().push_back(std::move(t));
    }
  };

  switch (code.kind) {
    case CodeKind::SB:
    case CodeKind::Gray: {
      // Codewords of the virtual values d .. 2^n - 1 are the invalid states.
      for (int k = d; k < (1 << width); ++k)
        projector_term(encode_int(k, 1 << width, code));
      break;
    }
    case CodeKind::BlockUnary: {
      // Per-block local validity: penalize block values that no variable
      // value maps to. Cross-block violations are left to mixers.
      const int g = code.block_size;
      const int blocks = (d + g - 1) / g;
      const int bw = width / blocks;
      for (int b = 0; b < blocks; ++b) {
        // Local values used in block b: 0 plus 1..(values covered).
        const int covered = std::min(g, d - b * g);
        for (std::uint32_t bits = 0; bits < (1u << bw); ++bits) {
          const std::uint32_t local =
              code.block_local == CodeKind::Gray
                  ? [bits] {
                      std::uint32_t k = 0;
                      for (std::uint32_t w = bits; w; w >>= 1) k ^= w;
                      return k;
                    }()
                  : bits;
          if (local <= static_cast<std::uint32_t>(covered)) continue;
          // Projector onto this block pattern only.
          for (std::uint32_t sel = 0; sel < (1u << bw); ++sel) {
            PauliTerm t;
            t.coeff = 1.0;
            for (int q = 0; q < bw; ++q) {
              t.coeff *= 0.5;
              if ((sel >> q) & 1u) {
                if ((bits >> q) & 1u) t.coeff = -t.coeff;
                t.ops[offset + b * bw + q] = 'Z';
              }
            }
            out.terms().push_back(std::move(t));
          }
        }
      }
      break;
    }
    case CodeKind::Unary:
    case CodeKind::DomainWall: {
      if (!allow_sparse)
        throw ContractError(
            "f_ss: validity penalties for sparse codes need allow_sparse "
            "(the operator has exponentially many terms; sparse-code "
            "algorithms normally use validity-preserving mixers instead)");
      // I minus the sum of valid-codeword projectors.
      out.terms().push_back(PauliTerm{});
      PauliPoly valid(assignment.total_qubits());
      for (std::uint32_t w : valid_codewords(d, code)) projector_term(w);
      // projector_term appended the valid projectors into `out`; negate them.
      for (std::size_t i = 1; i < out.terms().size(); ++i)
        out.terms()[i].coeff = -out.terms()[i].coeff;
      break;
    }
  }
  return out.simplified();
}

PenaltyOperator effective_cost(
    const OperatorPoly& cost, const std::vector<WeightedPenalty>& penalties,
    const std::optional<EncodingAssignment>& assignment) {
  for (const auto& p : penalties)
    if (p.weight < 0.0)
      throw ContractError("effective_cost: penalty weights must be >= 0");

  const bool any_pauli =
      std::any_of(penalties.begin(), penalties.end(), [](const auto& p) {
        return std::holds_alternative<PauliPoly>(p.op);
      });
  if (!any_pauli) {
    OperatorPoly out = cost;
    for (const auto& p : penalties)
      out = out + cxd{p.weight, 0.0} * std::get<OperatorPoly>(p.op);
    return out.simplified();
  }
  if (!assignment)
    throw ContractError(
        "effective_cost: mixing encoded and unencoded penalties requires an "
        "encoding assignment");
  PauliPoly out = lower_operator(cost, *assignment);
  for (const auto& p : penalties) {
    if (std::holds_alternative<PauliPoly>(p.op))
      out = out + cxd{p.weight, 0.0} * std::get<PauliPoly>(p.op);
    else
      out = out + cxd{p.weight, 0.0} *
                      lower_operator(std::get<OperatorPoly>(p.op), *assignment);
  }
  return out.simplified();
}

}  // namespace dqir
