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

#include <doctest.h>

#include <random>

#include "dqir/json_io.hpp"
#include "dqir/simulator.hpp"

using namespace dqir;

TEST_CASE("operator poly round-trips bit-exactly") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> coeff(-3.0, 3.0);
  DomainSpec dom({{"a", 3}, {"b", 4}});
  for (int trial = 0; trial < 10; ++trial) {
    OperatorPoly op(dom);
    for (int t = 0; t < 5; ++t) {
      ProductTerm term;
      term.coeff = cxd{coeff(rng), coeff(rng)};
      term.factors.emplace("a", LocalFactor::indicator(3, int(rng() % 3)));
      std::vector<cxd> diag(4);
      for (auto& x : diag) x = cxd{coeff(rng), coeff(rng)};
      term.factors.emplace("b", LocalFactor::value(diag));
      op.terms().push_back(std::move(term));
    }
    const auto text = to_json(op).dump();
    const auto back = operator_poly_from_json(json::parse(text));
    REQUIRE(back.terms().size() == op.terms().size());
    for (std::size_t i = 0; i < op.terms().size(); ++i) {
      CHECK(back.terms()[i].coeff == op.terms()[i].coeff);
      CHECK(back.terms()[i].factor_key() == op.terms()[i].factor_key());
    }
    // And the dump is deterministic.
    CHECK(to_json(back).dump() == text);
  }
}

TEST_CASE("factor kinds survive the round trip") {
  DomainSpec dom({{"x", 5}});
  for (const auto& op :
       {indicator(dom, "x", 3), number_op(dom, "x"),
        transfer(dom, "x", 1, 4, true), transfer(dom, "x", 0, 2, false)}) {
    const auto back = operator_poly_from_json(to_json(op));
    CHECK(back.struct_equal(op));
  }
  // General local matrices too.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Random(5, 5);
  const auto g = general_local(dom, "x", m);
  CHECK(operator_poly_from_json(to_json(g)).struct_equal(g));
}

TEST_CASE("pauli poly round-trips through the string form") {
  PauliPoly p(4);
  p.add_term(PauliTerm{cxd{1.25, -0.5}, {{0, 'X'}, {2, 'Z'}}});
  p.add_term(PauliTerm{cxd{0.125, 0.0}, {{1, 'Y'}, {3, 'Z'}}});
  const auto j = to_json(p);
  CHECK(j.at("terms").at(0).at("string") == "XIZI");
  const auto back = pauli_poly_from_json(j);
  CHECK(back.struct_equal(p));
}

TEST_CASE("circuits round-trip including macro gates") {
  Circuit c;
  c.n_qubits = 3;
  c.gates = {Gate::h(0), Gate::cnot(0, 2), Gate::rz(1, 0.3),
             Gate::mcry(2, {{0, true}, {1, false}}, 0.7),
             Gate::a_phi(0, 1, 1.1),
             Gate::pauli_exp({{0, 'Z'}, {1, 'Z'}}, 0.25)};
  const auto back = circuit_from_json(to_json(c));
  REQUIRE(back.gates.size() == c.gates.size());
  const auto diff =
      (to_dense(expanded(back)) - to_dense(expanded(c))).cwiseAbs().maxCoeff();
  CHECK(diff < 1e-12);
}

TEST_CASE("encoding specs parse both string and block-unary object forms") {
  CHECK(code_spec_from_json(json::parse(R"({"kind":"gray"})")) ==
        CodeSpec::gray());
  CHECK(code_spec_from_json(json::parse(R"("unary")")) == CodeSpec::unary());
  const auto bu = code_spec_from_json(
      json::parse(R"({"kind":{"bu":{"g":3,"local":"gray"}}})"));
  CHECK(bu == CodeSpec::block_unary(3, CodeKind::Gray));
  CHECK(code_spec_from_json(to_json(bu)) == bu);
  CHECK_THROWS_AS(code_spec_from_json(json::parse(R"("nope")")),
                  ContractError);
}

TEST_CASE("job files parse problems, penalties, and encodings") {
  const auto j = json::parse(R"({
    "schema_version": 1,
    "problem": {"kind": "tsp", "distances": [[0,1],[1,0]]},
    "penalties": [
      {"kind": "perm", "weight": 4.5},
      {"kind": "sum", "weight": 2.0, "coeffs": [-1, 0, 1], "target": 0},
      {"kind": "lin", "weight": 1.0, "row": {"x0": 2.0}, "bound": 1.0},
      {"kind": "validity", "variable": "x0", "weight": 3.0}
    ],
    "encoding": {"*": {"kind": "sb"}, "x1": "unary"}
  })");
  const auto job = job_from_json(j);
  REQUIRE(job.problem.has_value());
  CHECK(job.problem->kind == "tsp");
  CHECK(job.penalties.size() == 4);
  CHECK(job.penalties[0].weight == 4.5);
  CHECK(job.penalties[1].level_coeffs.size() == 3);
  const auto dom = job.problem->domain();
  const auto assign = job_assignment(job, dom);
  CHECK(assign.code_of("x0") == CodeSpec::sb());
  CHECK(assign.code_of("x1") == CodeSpec::unary());
}

TEST_CASE("mixer designs serialize with certificate data") {
  const auto design = gdpm_search(3, CodeSpec::sb());
  const auto j = to_json(design);
  CHECK(j.at("kind") == "gdpm");
  CHECK(j.at("certificate").at("valid_states").size() == 3);
  CHECK(j.at("certificate").at("union_edges").size() >= 2);
  CHECK(j.at("gates").size() == design.gates.size());
}
