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

#include "dqir/json_io.hpp"

namespace dqir {

namespace {

json complex_to_json(const cxd& c) { return json::array({c.real(), c.imag()}); }

cxd complex_from_json(const json& j) {
  return cxd{j.at(0).get<double>(), j.at(1).get<double>()};
}

json factor_to_json(const LocalFactor& f) {
  const auto& m = f.matrix();
  switch (f.classify()) {
    case FactorKind::Indicator: {
      int k = 0;
      for (int i = 0; i < f.dim(); ++i)
        if (m(i, i) != cxd{0.0, 0.0}) k = i;
      return json{{"kind", "indicator"}, {"k", k}};
    }
    case FactorKind::Value: {
      json diag = json::array();
      for (int i = 0; i < f.dim(); ++i) diag.push_back(complex_to_json(m(i, i)));
      return json{{"kind", "value"}, {"a", diag}};
    }
    case FactorKind::OneWayTransfer:
    case FactorKind::SymmetricTransfer: {
      int k = -1, l = -1;
      for (int i = 0; i < f.dim(); ++i)
        for (int jj = 0; jj < f.dim(); ++jj)
          if (i != jj && m(i, jj) != cxd{0.0, 0.0} && k < 0) {
            k = i;
            l = jj;
          }
      return json{{"kind", "transfer"},
                  {"k", k},
                  {"l", l},
                  {"symmetric", f.classify() == FactorKind::SymmetricTransfer}};
    }
    case FactorKind::GeneralLocal: {
      json rows = json::array();
      for (int i = 0; i < f.dim(); ++i) {
        json row = json::array();
        for (int jj = 0; jj < f.dim(); ++jj)
          row.push_back(complex_to_json(m(i, jj)));
        rows.push_back(std::move(row));
      }
      return json{{"kind", "general"}, {"matrix", rows}};
    }
  }
  throw ContractError("factor_to_json: unknown kind");
}

LocalFactor factor_from_json(const json& j, int d) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "indicator") return LocalFactor::indicator(d, j.at("k").get<int>());
  if (kind == "value") {
    std::vector<cxd> diag;
    for (const auto& e : j.at("a")) diag.push_back(complex_from_json(e));
    if (static_cast<int>(diag.size()) != d)
      throw ContractError("factor_from_json: value length != d");
    return LocalFactor::value(diag);
  }
  if (kind == "transfer") {
    const int k = j.at("k").get<int>();
    const int l = j.at("l").get<int>();
    return j.at("symmetric").get<bool>() ? LocalFactor::symmetric_transfer(d, k, l)
                                         : LocalFactor::one_way_transfer(d, k, l);
  }
  if (kind == "general") {
    const auto& rows = j.at("matrix");
    if (static_cast<int>(rows.size()) != d)
      throw ContractError("factor_from_json: matrix size != d");
    Eigen::MatrixXcd m(d, d);
    for (int i = 0; i < d; ++i)
      for (int jj = 0; jj < d; ++jj)
        m(i, jj) = complex_from_json(rows.at(i).at(jj));
    return LocalFactor(m);
  }
  throw ContractError("factor_from_json: unknown kind '" + kind + "'");
}

}  // namespace

json to_json(const OperatorPoly& op) {
  json dom = json::array();
  for (const auto& v : op.domain().variables())
    dom.push_back(json{{"id", v.id}, {"d", v.dim}});
  json terms = json::array();
  for (const auto& t : op.terms()) {
    json factors = json::object();
    for (const auto& [var, f] : t.factors) factors[var] = factor_to_json(f);
    terms.push_back(json{{"coeff", complex_to_json(t.coeff)},
                         {"factors", std::move(factors)}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"domain", std::move(dom)},
              {"terms", std::move(terms)}};
}

OperatorPoly operator_poly_from_json(const json& j) {
  std::vector<Variable> vars;
  for (const auto& v : j.at("domain"))
    vars.push_back({v.at("id").get<std::string>(), v.at("d").get<int>()});
  DomainSpec domain(std::move(vars));
  OperatorPoly op(domain);
  for (const auto& t : j.at("terms")) {
    ProductTerm term;
    term.coeff = complex_from_json(t.at("coeff"));
    for (const auto& [var, fj] : t.at("factors").items())
      term.factors.emplace(var, factor_from_json(fj, domain.dim_of(var)));
    op.add_term(std::move(term));
  }
  return op;
}

json to_json(const PauliPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms())
    terms.push_back(json{{"coeff", complex_to_json(t.coeff)},
                         {"string", t.to_string(p.n_qubits())}});
  return json{{"schema_version", kSchemaVersion},
              {"n_qubits", p.n_qubits()},
              {"terms", std::move(terms)}};
}

PauliPoly pauli_poly_from_json(const json& j) {
  PauliPoly p(j.at("n_qubits").get<int>());
  for (const auto& t : j.at("terms")) {
    PauliTerm term;
    term.coeff = complex_from_json(t.at("coeff"));
    const std::string s = t.at("string").get<std::string>();
    for (std::size_t q = 0; q < s.size(); ++q)
      if (s[q] != 'I') term.ops[static_cast<int>(q)] = s[q];
    p.add_term(std::move(term));
  }
  return p;
}

namespace {

std::string gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::CNOT: return "cnot";
    case GateKind::GPhase: return "gphase";
    case GateKind::PauliExp: return "pauli_exp";
    case GateKind::MCRY: return "mcry";
    case GateKind::APhi: return "a_phi";
    case GateKind::CAPhi: return "c_a_phi";
  }
  return "?";
}

GateKind gate_kind_from_name(const std::string& s) {
  if (s == "rx") return GateKind::RX;
  if (s == "ry") return GateKind::RY;
  if (s == "rz") return GateKind::RZ;
  if (s == "h") return GateKind::H;
  if (s == "x") return GateKind::X;
  if (s == "cnot") return GateKind::CNOT;
  if (s == "gphase") return GateKind::GPhase;
  if (s == "pauli_exp") return GateKind::PauliExp;
  if (s == "mcry") return GateKind::MCRY;
  if (s == "a_phi") return GateKind::APhi;
  if (s == "c_a_phi") return GateKind::CAPhi;
  throw ContractError("unknown gate kind '" + s + "'");
}

json gate_to_json(const Gate& g) {
  json out{{"kind", gate_kind_name(g.kind)}};
  json qubits = json::array();
  if (g.q0 >= 0) qubits.push_back(g.q0);
  if (g.q1 >= 0) qubits.push_back(g.q1);
  out["qubits"] = std::move(qubits);
  out["param"] = g.param;
  if (!g.controls.empty()) {
    json cs = json::array();
    for (const auto& [q, on] : g.controls)
      cs.push_back(json{{"qubit", q}, {"on", on}});
    out["controls"] = std::move(cs);
  }
  if (!g.pauli.empty()) {
    json ps = json::object();
    for (const auto& [q, op] : g.pauli)
      ps[std::to_string(q)] = std::string(1, op);
    out["pauli"] = std::move(ps);
  }
  return out;
}

Gate gate_from_json(const json& j) {
  Gate g;
  g.kind = gate_kind_from_name(j.at("kind").get<std::string>());
  const auto& qs = j.at("qubits");
  if (qs.size() > 0) g.q0 = qs.at(0).get<int>();
  if (qs.size() > 1) g.q1 = qs.at(1).get<int>();
  g.param = j.value("param", 0.0);
  if (j.contains("controls"))
    for (const auto& c : j.at("controls"))
      g.controls.emplace_back(c.at("qubit").get<int>(), c.at("on").get<bool>());
  if (j.contains("pauli"))
    for (const auto& [q, op] : j.at("pauli").items())
      g.pauli[std::stoi(q)] = op.get<std::string>().at(0);
  return g;
}

}  // namespace

json to_json(const Circuit& c) {
  json gates = json::array();
  for (const auto& g : c.gates) gates.push_back(gate_to_json(g));
  return json{{"schema_version", kSchemaVersion},
              {"n_qubits", c.n_qubits},
              {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const json& j) {
  Circuit c;
  c.n_qubits = j.at("n_qubits").get<int>();
  for (const auto& g : j.at("gates")) c.gates.push_back(gate_from_json(g));
  return c;
}

json to_json(const CodeSpec& code) {
  switch (code.kind) {
    case CodeKind::SB: return json{{"kind", "sb"}};
    case CodeKind::Gray: return json{{"kind", "gray"}};
    case CodeKind::Unary: return json{{"kind", "unary"}};
    case CodeKind::DomainWall: return json{{"kind", "dw"}};
    case CodeKind::BlockUnary:
      return json{{"kind",
                   json{{"bu",
                         json{{"g", code.block_size},
                              {"local", code.block_local == CodeKind::Gray
                                            ? "gray"
                                            : "sb"}}}}}};
  }
  throw ContractError("to_json(CodeSpec): unknown kind");
}

CodeSpec code_spec_from_json(const json& j) {
  const json& kind = j.is_object() && j.contains("kind") ? j.at("kind") : j;
  if (kind.is_string()) {
    const std::string s = kind.get<std::string>();
    if (s == "sb") return CodeSpec::sb();
    if (s == "gray") return CodeSpec::gray();
    if (s == "unary") return CodeSpec::unary();
    if (s == "dw") return CodeSpec::domain_wall();
    throw ContractError("unknown encoding '" + s + "'");
  }
  if (kind.is_object() && kind.contains("bu")) {
    const auto& bu = kind.at("bu");
    const std::string local = bu.value("local", std::string("gray"));
    return CodeSpec::block_unary(bu.at("g").get<int>(),
                                 local == "sb" ? CodeKind::SB : CodeKind::Gray);
  }
  throw ContractError("unrecognized encoding spec");
}

json to_json(const MixerDesign& d) {
  json gates = json::array();
  for (const auto& g : d.gates)
    gates.push_back(json{{"gate", gate_to_json(g.proto)},
                         {"parameterized", g.parameterized},
                         {"depth_cost", g.depth_cost},
                         {"descriptor", g.descriptor}});
  json valid = json::array();
  for (auto s : d.valid_states) valid.push_back(s);
  json edges = json::array();
  for (const auto& [u, v] : d.union_edges)
    edges.push_back(json::array({u, v}));
  return json{{"schema_version", kSchemaVersion},
              {"kind", d.kind},
              {"d", d.d},
              {"code", to_json(d.code)},
              {"n_qubits", d.n_qubits},
              {"gates", std::move(gates)},
              {"certificate",
               json{{"valid_states", std::move(valid)},
                    {"union_edges", std::move(edges)}}}};
}

json to_json(const DepthReport& r) {
  return json{{"encoding", r.encoding}, {"d", r.d},
              {"qubits", r.qubits},     {"depth", r.depth},
              {"entangling", r.entangling}, {"terms", r.terms}};
}

DomainSpec ProblemSpec::domain() const {
  if (kind == "coloring") return coloring_domain(std::get<ColoringInstance>(instance));
  if (kind == "tsp") return tsp_domain(std::get<TspInstance>(instance));
  if (kind == "sms") return sms_domain(std::get<SmsInstance>(instance));
  if (kind == "portfolio")
    return portfolio_domain(std::get<PortfolioInstance>(instance));
  if (kind == "ilp") return ilp_domain(std::get<IlpInstance>(instance));
  throw ContractError("unknown problem kind '" + kind + "'");
}

OperatorPoly ProblemSpec::cost() const {
  if (kind == "coloring") return coloring_cost(std::get<ColoringInstance>(instance));
  if (kind == "tsp") return tsp_cost(std::get<TspInstance>(instance));
  if (kind == "sms") return sms_cost(std::get<SmsInstance>(instance));
  if (kind == "portfolio")
    return portfolio_cost(std::get<PortfolioInstance>(instance)).first;
  if (kind == "ilp") return ilp_cost(std::get<IlpInstance>(instance));
  throw ContractError("unknown problem kind '" + kind + "'");
}

ProblemSpec problem_from_json(const json& j) {
  ProblemSpec spec;
  spec.kind = j.at("kind").get<std::string>();
  if (spec.kind == "coloring") {
    ColoringInstance inst;
    inst.num_nodes = j.at("nodes").get<int>();
    inst.num_colors = j.at("colors").get<int>();
    for (const auto& e : j.at("edges"))
      inst.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    spec.instance = std::move(inst);
  } else if (spec.kind == "tsp") {
    TspInstance inst;
    for (const auto& row : j.at("distances"))
      inst.dist.push_back(row.get<std::vector<double>>());
    inst.num_cities = static_cast<int>(inst.dist.size());
    spec.instance = std::move(inst);
  } else if (spec.kind == "sms") {
    SmsInstance inst;
    inst.processing = j.at("processing").get<std::vector<double>>();
    inst.deadline = j.at("deadlines").get<std::vector<double>>();
    inst.weight = j.at("weights").get<std::vector<double>>();
    spec.instance = std::move(inst);
  } else if (spec.kind == "portfolio") {
    PortfolioInstance inst;
    inst.lambda = j.at("lambda").get<double>();
    for (const auto& row : j.at("sigma"))
      inst.sigma.push_back(row.get<std::vector<double>>());
    inst.mu = j.at("mu").get<std::vector<double>>();
    inst.prev_position = j.at("previous").get<std::vector<int>>();
    inst.trade_cost = j.at("trade_cost").get<double>();
    inst.target = j.value("target", 0);
    spec.instance = std::move(inst);
  } else if (spec.kind == "ilp") {
    IlpInstance inst;
    if (j.contains("a"))
      for (const auto& row : j.at("a"))
        inst.a.push_back(row.get<std::vector<double>>());
    if (j.contains("b")) inst.b = j.at("b").get<std::vector<double>>();
    inst.c = j.at("c").get<std::vector<double>>();
    inst.dims = j.at("dims").get<std::vector<int>>();
    spec.instance = std::move(inst);
  } else {
    throw ContractError("unknown problem kind '" + spec.kind + "'");
  }
  return spec;
}

PenaltyRequest penalty_from_json(const json& j) {
  PenaltyRequest p;
  p.kind = j.at("kind").get<std::string>();
  p.weight = j.value("weight", 1.0);
  if (p.kind == "sum") {
    for (const auto& e : j.at("coeffs")) {
      if (e.is_array())
        p.level_coeffs.push_back(complex_from_json(e));
      else
        p.level_coeffs.push_back(cxd{e.get<double>(), 0.0});
    }
    p.target = j.at("target").get<double>();
  } else if (p.kind == "lin") {
    for (const auto& [var, coeff] : j.at("row").items())
      p.row[var] = coeff.get<double>();
    p.bound = j.at("bound").get<double>();
  } else if (p.kind == "validity") {
    p.variable = j.at("variable").get<std::string>();
    p.allow_sparse = j.value("allow_sparse", false);
  } else if (p.kind != "perm") {
    throw ContractError("unknown penalty kind '" + p.kind + "'");
  }
  return p;
}

JobFile job_from_json(const json& j) {
  JobFile job;
  job.schema_version = j.value("schema_version", kSchemaVersion);
  if (j.contains("problem")) job.problem = problem_from_json(j.at("problem"));
  if (j.contains("penalties"))
    for (const auto& p : j.at("penalties"))
      job.penalties.push_back(penalty_from_json(p));
  if (j.contains("encoding"))
    for (const auto& [var, code] : j.at("encoding").items())
      job.encoding[var] = code_spec_from_json(code);
  return job;
}

EncodingAssignment job_assignment(const JobFile& job,
                                  const DomainSpec& domain) {
  std::map<std::string, CodeSpec> codes;
  const auto star = job.encoding.find("*");
  for (const auto& v : domain.variables()) {
    auto it = job.encoding.find(v.id);
    if (it != job.encoding.end())
      codes[v.id] = it->second;
    else if (star != job.encoding.end())
      codes[v.id] = star->second;
    else
      throw ContractError("job: no encoding for variable '" + v.id + "'");
  }
  return EncodingAssignment(domain, std::move(codes));
}

}  // namespace dqir
