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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dqir/pauli.hpp"

namespace dqir {

enum class GateKind {
  // primitives
  RX,
  RY,
  RZ,
  H,
  X,
  CNOT,
  GPhase,  // global phase exp(-i * param), depth 0
  // macros with a defined expansion into primitives
  PauliExp,   // exp(-i * param * pauli_string)
  MCRY,       // R_Y on target, conditioned on controls with polarities
  APhi,       // exp(-i (param/2) (X_a X_b + Y_a Y_b)): mixes |01> <-> |10>
  CAPhi,      // APhi conditioned on controls with polarities
};

struct Gate {
  GateKind kind = GateKind::GPhase;
  double param = 0.0;
  int q0 = -1;  // target / first qubit
  int q1 = -1;  // CNOT target / second qubit of a pair gate
  std::vector<std::pair<int, bool>> controls;  // (qubit, on?)
  std::map<int, char> pauli;                   // PauliExp string

  static Gate make(GateKind kind, double param, int q0 = -1, int q1 = -1) {
    Gate g;
    g.kind = kind;
    g.param = param;
    g.q0 = q0;
    g.q1 = q1;
    return g;
  }
  static Gate rx(int q, double a) { return make(GateKind::RX, a, q); }
  static Gate ry(int q, double a) { return make(GateKind::RY, a, q); }
  static Gate rz(int q, double a) { return make(GateKind::RZ, a, q); }
  static Gate h(int q) { return make(GateKind::H, 0.0, q); }
  static Gate x(int q) { return make(GateKind::X, 0.0, q); }
  static Gate cnot(int c, int t) { return make(GateKind::CNOT, 0.0, c, t); }
  static Gate gphase(double a) { return make(GateKind::GPhase, a); }
  static Gate pauli_exp(std::map<int, char> ops, double a) {
    Gate g = make(GateKind::PauliExp, a);
    g.pauli = std::move(ops);
    return g;
  }
  static Gate mcry(int target, std::vector<std::pair<int, bool>> ctrls,
                   double a) {
    Gate g = make(GateKind::MCRY, a, target);
    g.controls = std::move(ctrls);
    return g;
  }
  static Gate a_phi(int a, int b, double angle) {
    return make(GateKind::APhi, angle, a, b);
  }
  static Gate c_a_phi(int a, int b, std::vector<std::pair<int, bool>> ctrls,
                      double angle) {
    Gate g = make(GateKind::CAPhi, angle, a, b);
    g.controls = std::move(ctrls);
    return g;
  }

  bool is_primitive() const {
    return kind == GateKind::RX || kind == GateKind::RY ||
           kind == GateKind::RZ || kind == GateKind::H ||
           kind == GateKind::X || kind == GateKind::CNOT ||
           kind == GateKind::GPhase;
  }

  /// Qubits the gate touches (targets + controls), ascending.
  std::vector<int> qubits() const;
};

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
};

/// Expand one gate into 1-qubit rotations and CNOTs. Multi-controlled R_Y
/// uses the alternating rotation/CNOT ladder (depth 2^(controls+1), exact);
/// A_phi uses a two-CNOT depth-5 circuit; controlled A_phi reduces to a
/// CNOT-conjugated multi-controlled rotation.
std::vector<Gate> decompose(const Gate& g);

/// Expand every macro gate recursively; primitives pass through.
Circuit expanded(const Circuit& c);

/// ASAP depth on all-to-all connectivity. Each primitive costs one layer;
/// runs of adjacent one-qubit gates on the same qubit fuse into one layer;
/// global phases are free. Macros must be expanded first.
int depth(const Circuit& c);

/// CNOT count (macros must be expanded first).
int entangling_count(const Circuit& c);

/// Deterministic term ordering for the product formula: greedy chaining of
/// terms by shared qubit support, seeded and tie-broken lexicographically.
std::vector<std::size_t> order_terms(const PauliPoly& p);

/// One Pauli-exponential macro per term of exp(-i beta P), in order_terms
/// order. Exact when P is diagonal. P must be Hermitian.
Circuit emit_product_formula(const PauliPoly& p, double beta);

/// Row of the encoding-comparison table.
struct DepthReport {
  std::string encoding;
  int d = 0;
  int qubits = 0;
  int depth = 0;
  int entangling = 0;
  int terms = 0;
};

/// Compile exp(-i beta P) and measure the expanded circuit.
DepthReport report_for(const PauliPoly& p, const std::string& encoding_name,
                       int d);

}  // namespace dqir
