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

#include "dqir/functions.hpp"
#include "dqir/mixers.hpp"
#include "dqir/simulator.hpp"

using namespace dqir;

TEST_CASE("identity PauliPoly densifies to the identity") {
  const auto m = to_dense(PauliPoly::identity(2));
  CHECK((m - DenseMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("number operator densifies to diag(0,1,2)") {
  DomainSpec dom({{"x", 3}});
  const auto m = to_dense(number_op(dom, "x"));
  for (int i = 0; i < 3; ++i) CHECK(m(i, i) == cxd{double(i), 0.0});
}

TEST_CASE("Pauli strings densify to the textbook matrices") {
  PauliPoly p(1);
  p.add_term(PauliTerm{1.0, {{0, 'Y'}}});
  const auto y = to_dense(p);
  CHECK(y(0, 1) == cxd{0.0, -1.0});
  CHECK(y(1, 0) == cxd{0.0, 1.0});
  CHECK(y(0, 0) == cxd{0.0, 0.0});
}

TEST_CASE("A_phi at pi/2 has the pair-mixer sparsity pattern") {
  Circuit c;
  c.n_qubits = 2;
  c.gates.push_back(Gate::a_phi(0, 1, 3.14159265358979323846 / 2.0));
  const auto u = to_dense(c);
  CHECK(std::abs(u(0, 0) - cxd{1.0, 0.0}) < 1e-12);
  CHECK(std::abs(u(3, 3) - cxd{1.0, 0.0}) < 1e-12);
  for (int i : {1, 2})
    for (int j : {0, 3}) {
      CHECK(std::abs(u(i, j)) < 1e-12);
      CHECK(std::abs(u(j, i)) < 1e-12);
    }
}

TEST_CASE("dimension cap is enforced") {
  DomainSpec dom = DomainSpec::uniform(7, 4);  // 4^7 = 16384 states
  CHECK_THROWS_AS(to_dense(OperatorPoly::identity(dom)), DimensionCapError);
}

TEST_CASE("circuit unitaries are unitary") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> a(-3.0, 3.0);
  Circuit c;
  c.n_qubits = 3;
  c.gates = {Gate::h(0),          Gate::rx(1, a(rng)), Gate::cnot(0, 2),
             Gate::ry(2, a(rng)), Gate::cnot(1, 0),    Gate::rz(0, a(rng)),
             Gate::a_phi(1, 2, a(rng)),
             Gate::mcry(0, {{1, true}, {2, false}}, a(rng))};
  CHECK(is_unitary_dense(to_dense(c)));
}

TEST_CASE("kron layout: lowered basis states line up with direct gate application") {
  DomainSpec dom({{"a", 2}, {"b", 2}});
  const auto assign = EncodingAssignment::uniform(dom, CodeSpec::sb());
  // X on qubit 1 flips variable b.
  Circuit c;
  c.n_qubits = 2;
  c.gates.push_back(Gate::x(1));
  DenseVector psi = DenseVector::Zero(4);
  psi[assign.encode_state({1, 0})] = 1.0;
  apply_circuit(c, psi);
  CHECK(std::abs(psi[assign.encode_state({1, 1})] - cxd{1.0, 0.0}) < 1e-12);
}

TEST_CASE("restricted_equiv is zero for self-consistent lowerings") {
  DomainSpec dom({{"a", 4}});
  const auto n = number_op(dom, "a");
  const auto assign = EncodingAssignment::uniform(dom, CodeSpec::sb());
  const auto p = lower_operator(n, assign);
  CHECK(restricted_equiv(n, p, assign) == doctest::Approx(0.0));

  // Hand expansion 1.5 I - Z1 - 0.5 Z0.
  PauliPoly hand(2);
  hand.add_term(PauliTerm{1.5, {}});
  hand.add_term(PauliTerm{-1.0, {{1, 'Z'}}});
  hand.add_term(PauliTerm{-0.5, {{0, 'Z'}}});
  CHECK(restricted_equiv(n, hand, assign) == doctest::Approx(0.0));
}

TEST_CASE("exp_check: diagonal exponentials are exact, beta = 0 is identity") {
  DomainSpec dom({{"a", 3}, {"b", 3}});
  const auto eq = eq_op(dom, "a", "b");
  const auto assign = EncodingAssignment::uniform(dom, CodeSpec::gray());
  const auto p = lower_operator(eq, assign);
  const Circuit c0 = expanded(emit_product_formula(p, 0.0));
  CHECK(exp_check(p, c0, 0.0) < 1e-12);
  const Circuit c = expanded(emit_product_formula(p, 1.3));
  CHECK(exp_check(p, c, 1.3) < 1e-9);
}

TEST_CASE("exp_check: first-order Trotter error shrinks roughly linearly in beta") {
  DomainSpec dom({{"x", 3}});
  const auto gen = shift_generator(dom, "x");
  const auto assign = EncodingAssignment::uniform(dom, CodeSpec::sb());
  const auto p = lower_operator(gen, assign);
  const double beta = 0.3;
  const Circuit c1 = expanded(emit_product_formula(p, beta));
  const Circuit c2 = expanded(emit_product_formula(p, beta / 2.0));
  const double e1 = exp_check(p, c1, beta);
  const double e2 = exp_check(p, c2, beta / 2.0);
  CHECK(e1 > 0.0);
  CHECK(e2 < e1);
  CHECK(e2 > e1 / 8.0);  // not collapsing faster than the Trotter order allows
}

TEST_CASE("leakage: identity circuit never leaks") {
  Circuit c;
  c.n_qubits = 2;
  DenseVector psi = DenseVector::Zero(4);
  psi[1] = 1.0;
  CHECK(leakage(c, {1, 2}, psi) == doctest::Approx(0.0));
}

TEST_CASE("leakage: X on one unary qubit leaks completely") {
  // d=2 in two qubits one-hot; start from |01> (value 0).
  Circuit c;
  c.n_qubits = 2;
  c.gates.push_back(Gate::x(0));
  DenseVector psi = DenseVector::Zero(4);
  psi[1] = 1.0;
  CHECK(leakage(c, {1, 2}, psi) == doctest::Approx(1.0));
}

TEST_CASE("leakage rejects infeasible initial states") {
  Circuit c;
  c.n_qubits = 2;
  DenseVector psi = DenseVector::Zero(4);
  psi[0] = 1.0;
  CHECK_THROWS_AS(leakage(c, {1, 2}, psi), ContractError);
}

TEST_CASE("hermitian_exp agrees with the diagonal fast path") {
  PauliPoly p(2);
  p.add_term(PauliTerm{0.7, {{0, 'Z'}}});
  p.add_term(PauliTerm{-0.4, {{0, 'Z'}, {1, 'Z'}}});
  const double beta = 0.9;
  const auto dense = hermitian_exp(to_dense(p), beta);
  for (int s = 0; s < 4; ++s) {
    const cxd want = std::exp(cxd{0, -beta * p.eval_diagonal(s).real()});
    CHECK(std::abs(dense(s, s) - want) < 1e-12);
  }
}

TEST_CASE("basis-state images agree between lowering and gate application") {
  // Random spot check of the kron ordering contract on a 3-variable system.
  DomainSpec dom({{"a", 2}, {"b", 2}, {"c", 2}});
  const auto assign = EncodingAssignment::uniform(dom, CodeSpec::sb());
  const auto op = indicator(dom, "b", 1);
  const auto p = lower_operator(op, assign);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> tup{int(rng() % 2), int(rng() % 2), int(rng() % 2)};
    const auto col = apply_to_basis(p, assign.encode_state(tup));
    const double want = tup[1] == 1 ? 1.0 : 0.0;
    double got = 0.0;
    if (auto it = col.find(assign.encode_state(tup)); it != col.end())
      got = it->second.real();
    CHECK(got == doctest::Approx(want));
  }
}
