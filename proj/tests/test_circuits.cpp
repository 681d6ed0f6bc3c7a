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

#include "dqir/circuits.hpp"
#include "dqir/encodings.hpp"
#include "dqir/functions.hpp"
#include "dqir/simulator.hpp"

using namespace dqir;

namespace {

double unitary_diff(const Circuit& a, const Circuit& b) {
  return (to_dense(a) - to_dense(b)).cwiseAbs().maxCoeff();
}

Circuit single(int n_qubits, const Gate& g) {
  Circuit c;
  c.n_qubits = n_qubits;
  c.gates.push_back(g);
  return c;
}

}  // namespace

TEST_CASE("ZZ exponential is two CNOTs and one RZ at depth 3") {
  PauliPoly p(2);
  p.add_term(PauliTerm{1.0, {{0, 'Z'}, {1, 'Z'}}});
  const Circuit c = expanded(emit_product_formula(p, 0.7));
  int cnots = 0, rzs = 0;
  for (const auto& g : c.gates) {
    cnots += g.kind == GateKind::CNOT;
    rzs += g.kind == GateKind::RZ;
  }
  CHECK(cnots == 2);
  CHECK(rzs == 1);
  CHECK(depth(c) == 3);
}

TEST_CASE("empty poly gives an empty circuit of depth 0") {
  const Circuit c = emit_product_formula(PauliPoly(3), 1.0);
  CHECK(c.gates.empty());
  CHECK(depth(c) == 0);
}

TEST_CASE("depth: shared-qubit CNOTs stack, disjoint ones overlap") {
  Circuit ladder;
  ladder.n_qubits = 3;
  ladder.gates = {Gate::cnot(0, 1), Gate::cnot(1, 2)};
  CHECK(depth(ladder) == 2);

  Circuit parallel;
  parallel.n_qubits = 4;
  parallel.gates = {Gate::cnot(0, 1), Gate::cnot(2, 3)};
  CHECK(depth(parallel) == 1);
}

TEST_CASE("adjacent one-qubit gates fuse into one layer") {
  Circuit c;
  c.n_qubits = 1;
  c.gates = {Gate::h(0), Gate::rz(0, 0.3), Gate::h(0)};
  CHECK(depth(c) == 1);
}

TEST_CASE("depth requires macros to be expanded") {
  Circuit c = single(2, Gate::a_phi(0, 1, 0.5));
  CHECK_THROWS_AS(depth(c), ContractError);
  CHECK(depth(expanded(c)) == 5);
}

TEST_CASE("controlled-RY decomposes exactly with two CNOTs at depth 4") {
  const Gate g = Gate::mcry(1, {{0, true}}, 0.83);
  const Circuit direct = single(2, g);
  const Circuit prim = expanded(direct);
  CHECK(unitary_diff(direct, prim) < 1e-9);
  CHECK(entangling_count(prim) == 2);
  // Depth 4 meets the 2^(controls+1) multi-controlled ceiling.
  CHECK(depth(prim) == 4);
}

TEST_CASE("off-polarity controlled-RY matches the X-conjugated direct unitary") {
  const Gate g = Gate::mcry(0, {{1, false}}, 1.1);
  const Circuit direct = single(2, g);
  CHECK(unitary_diff(direct, expanded(direct)) < 1e-9);
  // Acts on states with qubit 1 = 0 only.
  const auto u = to_dense(direct);
  CHECK(std::abs(u(0, 1)) > 1e-3);
  CHECK(std::abs(u(2, 3)) < 1e-12);
}

TEST_CASE("three-qubit multi-controlled RY meets the 2^Nq depth ceiling exactly") {
  const Gate g = Gate::mcry(2, {{0, true}, {1, false}}, 0.4);
  const Circuit direct = single(3, g);
  const Circuit prim = expanded(direct);
  CHECK(unitary_diff(direct, prim) < 1e-9);
  CHECK(depth(prim) <= 8);
}

TEST_CASE("four-qubit multi-controlled RY is exact and within depth 16") {
  const Gate g = Gate::mcry(0, {{1, true}, {2, true}, {3, false}}, 0.9);
  const Circuit direct = single(4, g);
  const Circuit prim = expanded(direct);
  CHECK(unitary_diff(direct, prim) < 1e-9);
  CHECK(depth(prim) <= 16);
}

TEST_CASE("A_phi decomposes exactly at depth 5") {
  const Gate g = Gate::a_phi(0, 1, 0.62);
  const Circuit direct = single(2, g);
  const Circuit prim = expanded(direct);
  CHECK(unitary_diff(direct, prim) < 1e-9);
  CHECK(depth(prim) == 5);
  // The sparsity pattern fixes |00> and |11> and mixes |01> <-> |10>.
  const auto u = to_dense(direct);
  CHECK(std::abs(u(0, 0) - cxd{1.0, 0.0}) < 1e-12);
  CHECK(std::abs(u(3, 3) - cxd{1.0, 0.0}) < 1e-12);
  CHECK(std::abs(u(1, 2)) > 1e-3);
  CHECK(std::abs(u(0, 1)) < 1e-12);
  CHECK(std::abs(u(0, 2)) < 1e-12);
}

TEST_CASE("controlled A_phi decomposes exactly") {
  const Gate g = Gate::c_a_phi(0, 1, {{2, true}}, 0.77);
  const Circuit direct = single(3, g);
  CHECK(unitary_diff(direct, expanded(direct)) < 1e-9);
  const auto u = to_dense(direct);
  // Control off: identity block.
  CHECK(std::abs(u(1, 1) - cxd{1.0, 0.0}) < 1e-12);
  CHECK(std::abs(u(1, 2)) < 1e-12);
  // Control on: |a=1,b=0> (index 5) mixes with |a=0,b=1> (index 6).
  CHECK(std::abs(u(5, 6)) > 1e-3);
}

TEST_CASE("product formula is exact for diagonal operators") {
  DomainSpec dom({{"a", 3}, {"b", 3}});
  const auto eq = eq_op(dom, "a", "b");
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> beta(-2.0, 2.0);
  for (auto code : {CodeSpec::sb(), CodeSpec::unary()}) {
    const auto assign = EncodingAssignment::uniform(dom, code);
    const auto p = lower_operator(eq, assign);
    for (int trial = 0; trial < 5; ++trial) {
      const double b = beta(rng);
      const Circuit c = expanded(emit_product_formula(p, b));
      CHECK(exp_check(p, c, b) < 1e-9);
    }
  }
}

TEST_CASE("product formula rejects complex coefficients") {
  PauliPoly p(1);
  p.add_term(PauliTerm{cxd{0.0, 1.0}, {{0, 'X'}}});
  CHECK_THROWS_AS(emit_product_formula(p, 1.0), ContractError);
}

TEST_CASE("order_terms chains terms by shared support") {
  PauliPoly p(4);
  p.add_term(PauliTerm{1.0, {{0, 'Z'}, {1, 'Z'}}});
  p.add_term(PauliTerm{1.0, {{2, 'Z'}, {3, 'Z'}}});
  p.add_term(PauliTerm{1.0, {{1, 'Z'}, {2, 'Z'}}});
  const auto order = order_terms(p);
  REQUIRE(order.size() == 3);
  // Starting from the lexicographically first term (Z0 Z1), its chained
  // successor must share qubit 1.
  CHECK(order[0] == 0);
  CHECK(order[1] == 2);
  CHECK(order[2] == 1);
}

TEST_CASE("order_terms on a single term is the identity") {
  PauliPoly p(2);
  p.add_term(PauliTerm{1.0, {{0, 'X'}}});
  CHECK(order_terms(p) == std::vector<std::size_t>{0});
}

TEST_CASE("disjoint-support terms schedule in parallel") {
  PauliPoly p(2);
  p.add_term(PauliTerm{0.5, {{0, 'X'}}});
  p.add_term(PauliTerm{0.5, {{1, 'Z'}}});
  const Circuit c = expanded(emit_product_formula(p, 0.3));
  CHECK(depth(c) == 1);  // each is a fused one-qubit block
}

TEST_CASE("identical polys compile to identical circuits") {
  DomainSpec dom({{"a", 5}, {"b", 5}});
  const auto eq = eq_op(dom, "a", "b");
  const auto assign = EncodingAssignment::uniform(dom, CodeSpec::gray());
  const auto p1 = lower_operator(eq, assign);
  const auto p2 = lower_operator(eq, assign);
  const Circuit c1 = expanded(emit_product_formula(p1, 0.9));
  const Circuit c2 = expanded(emit_product_formula(p2, 0.9));
  REQUIRE(c1.gates.size() == c2.gates.size());
  for (std::size_t i = 0; i < c1.gates.size(); ++i) {
    CHECK(c1.gates[i].kind == c2.gates[i].kind);
    CHECK(c1.gates[i].q0 == c2.gates[i].q0);
    CHECK(c1.gates[i].q1 == c2.gates[i].q1);
    CHECK(c1.gates[i].param == c2.gates[i].param);
  }
}
