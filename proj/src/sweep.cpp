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

#include "dqir/sweep.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "dqir/functions.hpp"
#include "dqir/penalties.hpp"
#include "dqir/problems.hpp"

namespace dqir {

OperatorPoly sweep_operator(const std::string& op, int d) {
  if (op == "eq") {
    DomainSpec dom = DomainSpec::uniform(2, d);
    return eq_op(dom, "x0", "x1");
  }
  if (op == "number") {
    DomainSpec dom = DomainSpec::uniform(1, d);
    return number_op(dom, "x0");
  }
  if (op == "number2") {
    DomainSpec dom = DomainSpec::uniform(1, d);
    const auto n = number_op(dom, "x0");
    return n * n;
  }
  if (op == "fperm") return f_perm(DomainSpec::uniform(3, d));
  if (op == "fsum") {
    DomainSpec dom = DomainSpec::uniform(2, d);
    std::vector<cxd> coeffs(d);
    for (int k = 0; k < d; ++k) coeffs[k] = double(k);
    return f_sum(dom, coeffs, d - 1);
  }
  if (op == "coloring") {
    // Complete graph on d nodes with d colors, the worst-case family.
    ColoringInstance inst;
    inst.num_nodes = d;
    inst.num_colors = d;
    for (int u = 0; u < d; ++u)
      for (int v = u + 1; v < d; ++v) inst.edges.emplace_back(u, v);
    return coloring_cost(inst);
  }
  if (op == "tsp") {
    // Ring metric distances.
    TspInstance inst;
    inst.num_cities = d;
    inst.dist.assign(d, std::vector<double>(d, 0.0));
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l)
        inst.dist[k][l] = std::min(std::abs(k - l), d - std::abs(k - l));
    return tsp_cost(inst);
  }
  if (op == "sms") {
    SmsInstance inst;
    for (int k = 0; k < d; ++k) {
      inst.processing.push_back(k + 1);
      inst.deadline.push_back(k + 1);
      inst.weight.push_back(1.0);
    }
    return sms_cost(inst);
  }
  throw ContractError("unknown sweep operator '" + op + "'");
}

PauliPoly sweep_fss(int d, const CodeSpec& code) {
  DomainSpec dom = DomainSpec::uniform(1, d);
  const auto assign = EncodingAssignment::uniform(dom, code);
  if (code.kind == CodeKind::Unary) return PauliPoly(assign.total_qubits());
  return f_ss("x0", assign, /*allow_sparse=*/true);
}

PauliPoly sweep_lowered(const std::string& op, int d, const CodeSpec& code) {
  if (op == "fss") return sweep_fss(d, code);
  const auto h = sweep_operator(op, d);
  return lower_operator(h, EncodingAssignment::uniform(h.domain(), code));
}

CodeSpec parse_code_name(const std::string& name) {
  if (name == "sb") return CodeSpec::sb();
  if (name == "gray") return CodeSpec::gray();
  if (name == "unary") return CodeSpec::unary();
  if (name == "dw") return CodeSpec::domain_wall();
  if (name.rfind("bu", 0) == 0) {
    std::size_t pos = 2;
    std::string digits;
    while (pos < name.size() &&
           std::isdigit(static_cast<unsigned char>(name[pos])))
      digits += name[pos++];
    if (!digits.empty()) {
      const std::string local = name.substr(pos);
      if (local.empty() || local == "gray")
        return CodeSpec::block_unary(std::stoi(digits), CodeKind::Gray);
      if (local == "sb")
        return CodeSpec::block_unary(std::stoi(digits), CodeKind::SB);
    }
  }
  throw ContractError("unknown encoding '" + name + "'");
}

std::string sweep_csv(const std::string& op,
                      const std::vector<std::string>& encodings, int dmin,
                      int dmax) {
  std::vector<DepthReport> rows;
  for (const auto& name : encodings) {
    const CodeSpec code = parse_code_name(name);
    for (int d = dmin; d <= dmax; ++d)
      rows.push_back(report_for(sweep_lowered(op, d, code), name, d));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.encoding, a.d) < std::tie(b.encoding, b.d);
  });
  std::ostringstream csv;
  csv << "encoding,d,qubits,depth,entangling,terms\n";
  for (const auto& r : rows)
    csv << r.encoding << "," << r.d << "," << r.qubits << "," << r.depth
        << "," << r.entangling << "," << r.terms << "\n";
  return csv.str();
}

}  // namespace dqir
