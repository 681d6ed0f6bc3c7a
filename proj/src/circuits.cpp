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

#include "dqir/circuits.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace dqir {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
}

std::vector<int> Gate::qubits() const {
  std::vector<int> qs;
  if (q0 >= 0) qs.push_back(q0);
  if (q1 >= 0) qs.push_back(q1);
  for (const auto& [q, on] : controls) qs.push_back(q);
  for (const auto& [q, op] : pauli) qs.push_back(q);
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  return qs;
}

namespace {

// Multi-controlled R_Y via the Gray-walk multiplexed-rotation circuit:
// 2^m rotations interleaved with 2^m CNOTs, all touching the target, for a
// depth of exactly 2^(m+1). Slot j carries angle
//   theta / 2^m * (-1)^(popcount(pattern & gray(j)))
// and a CNOT from the control where gray(j) and gray(j+1) differ (the wrap
// slot uses the highest control). Zero-angle rotations are kept so depth is
// angle-independent.
void emit_mc_ry(std::vector<Gate>& out, int target,
                const std::vector<std::pair<int, bool>>& controls,
                double angle) {
  if (controls.empty()) {
    out.push_back(Gate::ry(target, angle));
    return;
  }
  const int m = static_cast<int>(controls.size());
  const std::uint64_t slots = std::uint64_t{1} << m;
  std::uint64_t pattern = 0;
  for (int i = 0; i < m; ++i)
    if (controls[i].second) pattern |= std::uint64_t{1} << i;
  for (std::uint64_t j = 0; j < slots; ++j) {
    const std::uint64_t gray_j = j ^ (j >> 1);
    const double sign =
        (std::popcount(pattern & gray_j) % 2 == 0) ? 1.0 : -1.0;
    out.push_back(
        Gate::ry(target, sign * angle / static_cast<double>(slots)));
    int flip = m - 1;
    if (j + 1 < slots) {
      const std::uint64_t gray_next = (j + 1) ^ ((j + 1) >> 1);
      flip = std::countr_zero(gray_j ^ gray_next);
    }
    out.push_back(Gate::cnot(controls[flip].first, target));
  }
}

void emit_pauli_exp(std::vector<Gate>& out, const std::map<int, char>& ops,
                    double phi) {
  if (ops.empty()) {
    out.push_back(Gate::gphase(phi));
    return;
  }
  std::vector<int> support;
  for (const auto& [q, op] : ops) support.push_back(q);

  auto basis_in = [&](int q, char op) {
    if (op == 'X') out.push_back(Gate::h(q));
    if (op == 'Y') out.push_back(Gate::rx(q, kHalfPi));
  };
  auto basis_out = [&](int q, char op) {
    if (op == 'X') out.push_back(Gate::h(q));
    if (op == 'Y') out.push_back(Gate::rx(q, -kHalfPi));
  };

  for (const auto& [q, op] : ops) basis_in(q, op);
  for (std::size_t i = 0; i + 1 < support.size(); ++i)
    out.push_back(Gate::cnot(support[i], support[i + 1]));
  out.push_back(Gate::rz(support.back(), 2.0 * phi));
  for (std::size_t i = support.size() - 1; i-- > 0;)
    out.push_back(Gate::cnot(support[i], support[i + 1]));
  for (const auto& [q, op] : ops) basis_out(q, op);
}

void emit_a_phi(std::vector<Gate>& out, int a, int b, double theta) {
  // exp(-i theta/2 (XX+YY)) = V . CNOT . (Rx(theta)_a Rz(theta)_b) . CNOT . V+
  // with V = Rx(pi/2) on both qubits.
  out.push_back(Gate::rx(a, kHalfPi));
  out.push_back(Gate::rx(b, kHalfPi));
  out.push_back(Gate::cnot(a, b));
  out.push_back(Gate::rx(a, theta));
  out.push_back(Gate::rz(b, theta));
  out.push_back(Gate::cnot(a, b));
  out.push_back(Gate::rx(a, -kHalfPi));
  out.push_back(Gate::rx(b, -kHalfPi));
}

void emit_c_a_phi(std::vector<Gate>& out, int a, int b,
                  std::vector<std::pair<int, bool>> controls, double theta) {
  // CNOT(a->b) conjugation turns the pair mixer into an Rx on `a`
  // controlled on b; the polarity controls ride along unchanged.
  out.push_back(Gate::cnot(a, b));
  out.push_back(Gate::rz(a, kHalfPi));
  controls.emplace_back(b, true);
  emit_mc_ry(out, a, controls, 2.0 * theta);
  out.push_back(Gate::rz(a, -kHalfPi));
  out.push_back(Gate::cnot(a, b));
}

}  // namespace

std::vector<Gate> decompose(const Gate& g) {
  std::vector<Gate> out;
  switch (g.kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::H:
    case GateKind::X:
    case GateKind::CNOT:
    case GateKind::GPhase:
      out.push_back(g);
      return out;
    case GateKind::PauliExp:
      emit_pauli_exp(out, g.pauli, g.param);
      return out;
    case GateKind::MCRY:
      emit_mc_ry(out, g.q0, g.controls, g.param);
      return out;
    case GateKind::APhi:
      emit_a_phi(out, g.q0, g.q1, g.param);
      return out;
    case GateKind::CAPhi:
      emit_c_a_phi(out, g.q0, g.q1, g.controls, g.param);
      return out;
  }
  throw ContractError("decompose: unknown gate kind");
}

Circuit expanded(const Circuit& c) {
  Circuit out;
  out.n_qubits = c.n_qubits;
  for (const auto& g : c.gates) {
    auto prim = decompose(g);
    out.gates.insert(out.gates.end(), prim.begin(), prim.end());
  }
  return out;
}

int depth(const Circuit& c) {
  std::vector<int> layer(c.n_qubits, 0);
  std::vector<bool> last_was_1q(c.n_qubits, false);
  int max_layer = 0;
  for (const auto& g : c.gates) {
    if (!g.is_primitive())
      throw ContractError("depth: circuit contains an unexpanded macro gate");
    if (g.kind == GateKind::GPhase) continue;
    if (g.kind == GateKind::CNOT) {
      const int l = std::max(layer[g.q0], layer[g.q1]) + 1;
      layer[g.q0] = layer[g.q1] = l;
      last_was_1q[g.q0] = last_was_1q[g.q1] = false;
      max_layer = std::max(max_layer, l);
    } else {
      const int q = g.q0;
      const int l = last_was_1q[q] ? layer[q] : layer[q] + 1;
      layer[q] = l;
      last_was_1q[q] = true;
      max_layer = std::max(max_layer, l);
    }
  }
  return max_layer;
}

int entangling_count(const Circuit& c) {
  int n = 0;
  for (const auto& g : c.gates) {
    if (!g.is_primitive())
      throw ContractError("entangling_count: unexpanded macro gate");
    if (g.kind == GateKind::CNOT) ++n;
  }
  return n;
}

std::vector<std::size_t> order_terms(const PauliPoly& p) {
  const auto& terms = p.terms();
  const std::size_t n = terms.size();

  // Canonical starting order: lexicographic by term key.
  std::vector<std::size_t> lex(n);
  for (std::size_t i = 0; i < n; ++i) lex[i] = i;
  std::sort(lex.begin(), lex.end(), [&](std::size_t a, std::size_t b) {
    return terms[a].key() < terms[b].key();
  });

  std::vector<bool> used(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);

  auto overlap = [&](std::size_t a, std::size_t b) {
    int shared = 0;
    const auto& oa = terms[a].ops;
    const auto& ob = terms[b].ops;
    for (const auto& [q, op] : oa)
      if (ob.count(q)) ++shared;
    return shared;
  };

  for (std::size_t start = 0; start < n; ++start) {
    if (used[lex[start]]) continue;
    std::size_t cur = lex[start];
    used[cur] = true;
    order.push_back(cur);
    // Chain: keep picking the unused term sharing the most qubits with the
    // current one; fall back to lexicographic when no overlap remains.
    while (true) {
      int best_shared = 0;
      std::size_t best = n;
      for (std::size_t cand : lex) {
        if (used[cand]) continue;
        const int s = overlap(cur, cand);
        if (s > best_shared) {
          best_shared = s;
          best = cand;
        }
      }
      if (best == n) break;
      used[best] = true;
      order.push_back(best);
      cur = best;
    }
  }
  return order;
}

Circuit emit_product_formula(const PauliPoly& p, double beta) {
  const PauliPoly s = p.simplified();
  if (!s.is_hermitian())
    throw ContractError(
        "emit_product_formula: operator has complex coefficients");
  Circuit c;
  c.n_qubits = s.n_qubits();
  for (std::size_t idx : order_terms(s)) {
    const auto& t = s.terms()[idx];
    c.gates.push_back(Gate::pauli_exp(t.ops, beta * t.coeff.real()));
  }
  return c;
}

DepthReport report_for(const PauliPoly& p, const std::string& encoding_name,
                       int d) {
  const PauliPoly s = p.simplified();
  const Circuit c = expanded(emit_product_formula(s, 1.0));
  DepthReport r;
  r.encoding = encoding_name;
  r.d = d;
  r.qubits = s.n_qubits();
  r.depth = depth(c);
  r.entangling = entangling_count(c);
  r.terms = static_cast<int>(s.terms().size());
  return r;
}

}  // namespace dqir
