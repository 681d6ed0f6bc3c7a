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

#include "dqir/mixers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace dqir {

OperatorPoly shift_generator(const DomainSpec& domain, const std::string& var) {
  const int d = domain.dim_of(var);
  OperatorPoly g(domain);
  for (int k = 1; k < d; ++k)
    g = g + transfer(domain, var, k, k - 1, /*symmetric=*/true);
  return g;
}

OperatorPoly ring_generator(const DomainSpec& domain, const std::string& var) {
  const int d = domain.dim_of(var);
  OperatorPoly g = shift_generator(domain, var);
  if (d > 2) g = g + transfer(domain, var, 0, d - 1, /*symmetric=*/true);
  return g;
}

OperatorPoly sppm_generator(const DomainSpec& domain, const std::string& a,
                            const std::string& b) {
  const int d = domain.dim_of(a);
  if (domain.dim_of(b) != d)
    throw ContractError("sppm_generator: variables must share one cardinality");
  if (a == b) throw ContractError("sppm_generator: variables must differ");
  OperatorPoly g(domain);
  for (int k = 1; k < d; ++k) {
    g = g + transfer(domain, a, k, k - 1, false) *
                transfer(domain, b, k - 1, k, false);
    g = g + transfer(domain, a, k - 1, k, false) *
                transfer(domain, b, k, k - 1, false);
  }
  return g.simplified();
}

Circuit trotter_mixer(const OperatorPoly& generator,
                      const EncodingAssignment& assignment, double beta) {
  if (!generator.is_hermitian())
    throw ContractError("trotter_mixer: generator is not Hermitian");
  return emit_product_formula(lower_operator(generator, assignment), beta);
}

PartialMixerGraph pmg_of(const DenseMatrix& u) {
  PartialMixerGraph g;
  g.n_states = static_cast<std::uint64_t>(u.rows());
  if (u.rows() > (1 << 12))
    throw DimensionCapError("pmg_of: register above the 12-qubit cap");
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    for (Eigen::Index j = i + 1; j < u.cols(); ++j)
      if (std::abs(u(i, j)) > kStructuralTol ||
          std::abs(u(j, i)) > kStructuralTol)
        g.edges.emplace_back(i, j);
  return g;
}

Gate MixerGate::instantiate(double angle) const {
  Gate g = proto;
  if (parameterized) g.param = angle;
  return g;
}

PartialMixerGraph MixerGate::pmg(int n_qubits) const {
  PartialMixerGraph g;
  g.n_states = std::uint64_t{1} << n_qubits;
  auto controls_match = [&](std::uint64_t s) {
    for (const auto& [q, on] : proto.controls)
      if (static_cast<bool>((s >> q) & 1ull) != on) return false;
    return true;
  };
  switch (proto.kind) {
    case GateKind::RX:
    case GateKind::RY: {
      const std::uint64_t bit = std::uint64_t{1} << proto.q0;
      for (std::uint64_t s = 0; s < g.n_states; ++s)
        if (!(s & bit)) g.edges.emplace_back(s, s | bit);
      return g;
    }
    case GateKind::MCRY: {
      const std::uint64_t bit = std::uint64_t{1} << proto.q0;
      for (std::uint64_t s = 0; s < g.n_states; ++s)
        if (!(s & bit) && controls_match(s)) g.edges.emplace_back(s, s | bit);
      return g;
    }
    case GateKind::APhi:
    case GateKind::CAPhi: {
      const std::uint64_t abit = std::uint64_t{1} << proto.q0;
      const std::uint64_t bbit = std::uint64_t{1} << proto.q1;
      for (std::uint64_t s = 0; s < g.n_states; ++s) {
        if (!(s & abit) || (s & bbit)) continue;
        if (proto.kind == GateKind::CAPhi && !controls_match(s)) continue;
        const std::uint64_t p = (s ^ abit) | bbit;
        g.edges.emplace_back(std::min(s, p), std::max(s, p));
      }
      std::sort(g.edges.begin(), g.edges.end());
      return g;
    }
    case GateKind::CNOT: {
      const std::uint64_t cbit = std::uint64_t{1} << proto.q0;
      const std::uint64_t tbit = std::uint64_t{1} << proto.q1;
      for (std::uint64_t s = 0; s < g.n_states; ++s)
        if ((s & cbit) && !(s & tbit)) g.edges.emplace_back(s, s | tbit);
      return g;
    }
    default:
      throw ContractError("MixerGate::pmg: unsupported gate kind");
  }
}

namespace {

std::string control_suffix(const std::vector<std::pair<int, bool>>& ctrls) {
  std::ostringstream os;
  for (const auto& [q, on] : ctrls) os << " c" << q << (on ? '+' : '-');
  return os.str();
}

int mcry_cost(int num_controls) {
  if (num_controls == 0) return 1;
  if (num_controls == 1) return 3;
  return 1 << (num_controls + 1);
}

}  // namespace

MixerGate make_rx_gate(int qubit) {
  MixerGate m;
  m.proto = Gate::rx(qubit, 0.0);
  m.depth_cost = 1;
  m.descriptor = "rx q" + std::to_string(qubit);
  return m;
}

MixerGate make_mcry_gate(int target, std::vector<std::pair<int, bool>> ctrls) {
  MixerGate m;
  std::sort(ctrls.begin(), ctrls.end());
  m.depth_cost = mcry_cost(static_cast<int>(ctrls.size()));
  m.descriptor = "mcry t" + std::to_string(target) + control_suffix(ctrls);
  m.proto = Gate::mcry(target, std::move(ctrls), 0.0);
  return m;
}

MixerGate make_aphi_gate(int a, int b) {
  MixerGate m;
  m.proto = Gate::a_phi(a, b, 0.0);
  m.depth_cost = 5;
  m.descriptor = "aphi " + std::to_string(a) + " " + std::to_string(b);
  return m;
}

MixerGate make_caphi_gate(int a, int b,
                          std::vector<std::pair<int, bool>> ctrls) {
  MixerGate m;
  std::sort(ctrls.begin(), ctrls.end());
  m.descriptor = "caphi " + std::to_string(a) + " " + std::to_string(b) +
                 control_suffix(ctrls);
  m.proto = Gate::c_a_phi(a, b, std::move(ctrls), 0.0);
  Circuit c;
  c.n_qubits = 0;  // depth only needs relative layering
  for (int q : m.proto.qubits()) c.n_qubits = std::max(c.n_qubits, q + 1);
  c.gates.push_back(m.instantiate(kGenericAngle));
  m.depth_cost = depth(expanded(c));
  return m;
}

MixerGate make_cnot_fixed(int control, int target) {
  MixerGate m;
  m.proto = Gate::cnot(control, target);
  m.parameterized = false;
  m.depth_cost = 1;
  m.descriptor =
      "cnot " + std::to_string(control) + ">" + std::to_string(target);
  return m;
}

std::vector<MixerGate> default_gdpm_library(int n_qubits) {
  std::vector<MixerGate> lib;
  for (int t = 0; t < n_qubits; ++t) {
    std::vector<int> others;
    for (int q = 0; q < n_qubits; ++q)
      if (q != t) others.push_back(q);
    const int m = static_cast<int>(others.size());
    for (int subset = 0; subset < (1 << m); ++subset) {
      std::vector<int> ctrl_qubits;
      for (int i = 0; i < m; ++i)
        if ((subset >> i) & 1) ctrl_qubits.push_back(others[i]);
      const int c = static_cast<int>(ctrl_qubits.size());
      for (int pols = 0; pols < (1 << c); ++pols) {
        std::vector<std::pair<int, bool>> ctrls;
        for (int i = 0; i < c; ++i)
          ctrls.emplace_back(ctrl_qubits[i], ((pols >> i) & 1) != 0);
        lib.push_back(make_mcry_gate(t, std::move(ctrls)));
      }
    }
  }
  return lib;
}

std::size_t MixerDesign::num_parameters() const {
  std::size_t n = 0;
  for (const auto& g : gates)
    if (g.parameterized) ++n;
  return n;
}

Circuit MixerDesign::instantiate(const std::vector<double>& angles) const {
  if (angles.size() != num_parameters())
    throw ContractError("MixerDesign: expected " +
                        std::to_string(num_parameters()) + " angles");
  Circuit c;
  c.n_qubits = n_qubits;
  std::size_t i = 0;
  for (const auto& g : gates)
    c.gates.push_back(g.parameterized ? g.instantiate(angles[i++]) : g.proto);
  return c;
}

int MixerDesign::decomposed_depth() const {
  std::vector<double> angles(num_parameters());
  for (std::size_t i = 0; i < angles.size(); ++i)
    angles[i] = kGenericAngle * (1.0 + 0.37 * static_cast<double>(i));
  return depth(expanded(instantiate(angles)));
}

namespace {

// Edge set over the S_G node pairs as a small bitset.
struct EdgeSet {
  std::vector<std::uint64_t> bits;

  void resize(std::size_t n_pairs) { bits.assign((n_pairs + 63) / 64, 0); }
  void set(std::size_t i) { bits[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const {
    return (bits[i / 64] >> (i % 64)) & 1ull;
  }
  EdgeSet united(const EdgeSet& o) const {
    EdgeSet r = *this;
    for (std::size_t i = 0; i < bits.size(); ++i) r.bits[i] |= o.bits[i];
    return r;
  }
  bool operator<(const EdgeSet& o) const { return bits < o.bits; }
  bool operator==(const EdgeSet& o) const { return bits == o.bits; }
};

struct Candidate {
  EdgeSet edges;
  std::vector<int> gate_ids;
  int cost = 0;
  std::string lex;
};

int component_count(const EdgeSet& es,
                    const std::vector<std::pair<int, int>>& pair_nodes,
                    int n_nodes) {
  std::vector<int> parent(n_nodes);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < pair_nodes.size(); ++i) {
    if (!es.test(i)) continue;
    const int a = find(pair_nodes[i].first);
    const int b = find(pair_nodes[i].second);
    if (a != b) parent[a] = b;
  }
  std::set<int> roots;
  for (int x = 0; x < n_nodes; ++x) roots.insert(find(x));
  return static_cast<int>(roots.size());
}

// Algorithm core: keep library graphs without S_G-S_B edges, induce on S_G,
// and grow unions of minimum-component candidates until one is connected.
// Returns the selected gates; fills union_edges with the winning union
// restricted to S_G.
std::vector<MixerGate> search_union(
    int n, const std::set<std::uint64_t>& sg,
    const std::vector<MixerGate>& library,
    std::vector<std::pair<std::uint64_t, std::uint64_t>>* union_edges);

}  // namespace

MixerDesign gdpm_search(int d, const CodeSpec& code,
                        const std::vector<MixerGate>& library_in) {
  const int n = code_qubits(code, d);
  if (n > 12)
    throw DimensionCapError("gdpm_search: register above the 12-qubit cap");
  const std::uint64_t n_states = std::uint64_t{1} << n;

  MixerDesign design;
  design.d = d;
  design.code = code;
  design.n_qubits = n;

  const auto codewords = valid_codewords(d, code);
  std::set<std::uint64_t> sg(codewords.begin(), codewords.end());
  design.valid_states.assign(sg.begin(), sg.end());

  // Every encoded state valid: the single-layer R_X product is strict.
  if (sg.size() == n_states) {
    design.kind = "sbm";
    for (int q = 0; q < n; ++q) design.gates.push_back(make_rx_gate(q));
    std::set<std::pair<std::uint64_t, std::uint64_t>> edges;
    for (const auto& g : design.gates)
      for (const auto& e : g.pmg(n).edges) edges.insert(e);
    design.union_edges.assign(edges.begin(), edges.end());
    return design;
  }

  // Block unary: compact mixers within each block plus doubly-controlled
  // A_phi bridges between adjacent blocks cannot come out of a single-bit
  // rotation library, so the design is assembled rather than searched.
  if (code.kind == CodeKind::BlockUnary && library_in.empty()) {
    design.kind = "gdpm";
    const int g = code.block_size;
    const int blocks = (d + g - 1) / g;
    const int bw = n / blocks;

    const std::uint32_t bridge_hi = encode_int(
        g, 1 << bw, CodeSpec{code.block_local});  // local codeword of g
    const std::uint32_t bridge_lo =
        encode_int(1, 1 << bw, CodeSpec{code.block_local});
    if (blocks > 1 &&
        (std::popcount(bridge_hi) != 1 || std::popcount(bridge_lo) != 1))
      throw LibraryInsufficientError(
          "gdpm_search: block-unary bridges need local codewords of 1 and " +
              std::to_string(g) + " with a single set bit (local " +
              (code.block_local == CodeKind::Gray ? std::string("gray")
                                                  : std::string("sb")) +
              " does not provide them for g=" + std::to_string(g) + ")",
          blocks);

    for (int b = 0; b < blocks; ++b) {
      const int covered = std::min(g, d - b * g);
      if (covered < 2) continue;
      // Local mixer over this block's occupied values; local zero marks
      // "value lives in another block" and must stay untouched.
      std::set<std::uint64_t> local_sg;
      for (int v = 1; v <= covered; ++v)
        local_sg.insert(encode_int(v, 1 << bw, CodeSpec{code.block_local}));
      const auto local_gates =
          search_union(bw, local_sg, default_gdpm_library(bw), nullptr);
      for (const auto& lg : local_gates) {
        Gate shifted = lg.proto;
        shifted.q0 += b * bw;
        for (auto& [q, on] : shifted.controls) q += b * bw;
        MixerGate mg = lg;
        mg.proto = shifted;
        mg.descriptor = "block" + std::to_string(b) + " " + lg.descriptor;
        design.gates.push_back(std::move(mg));
      }
      if (b == 0) continue;
      // Bridge values b*g - 1 (local g in block b-1) and b*g (local 1 here).
      const int qa = (b - 1) * bw + std::countr_zero(bridge_hi);
      const int qb = b * bw + std::countr_zero(bridge_lo);
      std::vector<std::pair<int, bool>> ctrls;
      for (int q = (b - 1) * bw; q < (b + 1) * bw; ++q)
        if (q != qa && q != qb) ctrls.emplace_back(q, false);
      design.gates.push_back(make_caphi_gate(qa, qb, std::move(ctrls)));
    }

    std::set<std::pair<std::uint64_t, std::uint64_t>> edges;
    for (const auto& mg : design.gates)
      for (const auto& [u, v] : mg.pmg(n).edges)
        if (sg.count(u) && sg.count(v)) edges.insert({u, v});
    design.union_edges.assign(edges.begin(), edges.end());
    return design;
  }

  const std::vector<MixerGate> library =
      library_in.empty() ? default_gdpm_library(n) : library_in;
  design.kind = "gdpm";
  design.gates = search_union(n, sg, library, &design.union_edges);
  return design;
}

namespace {

std::vector<MixerGate> search_union(
    int n, const std::set<std::uint64_t>& sg,
    const std::vector<MixerGate>& library,
    std::vector<std::pair<std::uint64_t, std::uint64_t>>* union_edges) {
  if (library.empty())
    throw ContractError("gdpm_search: empty gate library");
  const std::vector<std::uint64_t> valid(sg.begin(), sg.end());

  // Node order within S_G and the pair table for edge bitsets.
  std::map<std::uint64_t, int> node_of;
  for (std::uint64_t s : valid) node_of[s] = static_cast<int>(node_of.size());
  const int n_nodes = static_cast<int>(node_of.size());
  std::vector<std::pair<int, int>> pair_nodes;
  std::map<std::pair<int, int>, std::size_t> pair_index;
  for (int a = 0; a < n_nodes; ++a)
    for (int b = a + 1; b < n_nodes; ++b) {
      pair_index[{a, b}] = pair_nodes.size();
      pair_nodes.emplace_back(a, b);
    }

  // Steps 2-4: graphs, leakage filter, induced subgraphs on S_G.
  struct LibEntry {
    int id;
    EdgeSet edges;
  };
  std::vector<LibEntry> usable;
  for (std::size_t i = 0; i < library.size(); ++i) {
    const auto g = library[i].pmg(n);
    bool leaky = false;
    EdgeSet es;
    es.resize(pair_nodes.size());
    for (const auto& [u, v] : g.edges) {
      const bool gu = sg.count(u) != 0, gv = sg.count(v) != 0;
      if (gu != gv) {
        leaky = true;
        break;
      }
      if (gu && gv) {
        const int a = std::min(node_of[u], node_of[v]);
        const int b = std::max(node_of[u], node_of[v]);
        es.set(pair_index[{a, b}]);
      }
    }
    if (!leaky) usable.push_back({static_cast<int>(i), std::move(es)});
  }
  if (usable.empty())
    throw LibraryInsufficientError(
        "gdpm_search: every library gate leaks between valid and invalid "
        "states",
        n_nodes);

  auto make_candidate = [&](const Candidate* base, const LibEntry& l) {
    Candidate c;
    if (base) {
      c.edges = base->edges.united(l.edges);
      c.gate_ids = base->gate_ids;
      c.cost = base->cost;
      c.lex = base->lex;
    } else {
      c.edges = l.edges;
    }
    c.gate_ids.push_back(l.id);
    c.cost += library[l.id].depth_cost;
    c.lex += library[l.id].descriptor;
    c.lex.push_back('|');
    return c;
  };

  constexpr std::size_t kCandidateCap = 4096;
  auto rank_less = [](const Candidate& a, const Candidate& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.lex < b.lex;
  };
  auto dedup = [&](std::vector<Candidate>& cands) {
    std::map<EdgeSet, std::size_t> best;
    std::vector<Candidate> out;
    for (auto& c : cands) {
      auto it = best.find(c.edges);
      if (it == best.end()) {
        best[c.edges] = out.size();
        out.push_back(std::move(c));
      } else if (rank_less(c, out[it->second])) {
        out[it->second] = std::move(c);
      }
    }
    cands = std::move(out);
  };

  std::vector<Candidate> m_set;
  for (const auto& l : usable) m_set.push_back(make_candidate(nullptr, l));
  dedup(m_set);

  int best_components = n_nodes + 1;
  const int max_rounds = n_nodes + 2;
  for (int round = 0; round < max_rounds; ++round) {
    int min_comp = n_nodes + 1;
    std::vector<int> comps(m_set.size());
    for (std::size_t i = 0; i < m_set.size(); ++i) {
      comps[i] = component_count(m_set[i].edges, pair_nodes, n_nodes);
      min_comp = std::min(min_comp, comps[i]);
    }
    best_components = std::min(best_components, min_comp);

    if (min_comp == 1) {
      const Candidate* winner = nullptr;
      for (std::size_t i = 0; i < m_set.size(); ++i)
        if (comps[i] == 1 && (!winner || rank_less(m_set[i], *winner)))
          winner = &m_set[i];
      design.kind = "gdpm";
      for (int id : winner->gate_ids) design.gates.push_back(library[id]);
      for (std::size_t p = 0; p < pair_nodes.size(); ++p)
        if (winner->edges.test(p))
          design.union_edges.emplace_back(
              design.valid_states[pair_nodes[p].first],
              design.valid_states[pair_nodes[p].second]);
      return design;
    }

    // Step 6: pare down to the minimum-component candidates.
    std::vector<Candidate> filtered;
    for (std::size_t i = 0; i < m_set.size(); ++i)
      if (comps[i] == min_comp) filtered.push_back(std::move(m_set[i]));
    std::sort(filtered.begin(), filtered.end(), rank_less);
    if (filtered.size() > kCandidateCap) filtered.resize(kCandidateCap);

    // Step 7: union each survivor with each library graph.
    std::vector<Candidate> next = filtered;
    for (const auto& m : filtered)
      for (const auto& l : usable) next.push_back(make_candidate(&m, l));
    dedup(next);
    m_set = std::move(next);
  }
  throw LibraryInsufficientError(
      "gdpm_search: library insufficient for d=" + std::to_string(d) +
          " under " + code.name() + "; best component count " +
          std::to_string(best_components),
      best_components);
}

namespace {

// Gray-to-SB / SB-to-Gray conversion layers for one register.
void append_conversion(std::vector<MixerGate>& gates, int offset, int width,
                       bool sb_to_gray) {
  if (sb_to_gray) {
    for (int i = 0; i < width - 1; ++i)
      gates.push_back(make_cnot_fixed(offset + i + 1, offset + i));
  } else {
    for (int i = width - 2; i >= 0; --i)
      gates.push_back(make_cnot_fixed(offset + i + 1, offset + i));
  }
}

}  // namespace

MixerDesign ppm_construct(int d, const CodeSpec& code) {
  if (d < 2 || d > 16)
    throw ContractError("ppm_construct: d must be in [2,16]");
  if (!code.is_compact())
    throw ContractError("ppm_construct: only Gray and SB are supported");
  const int n = code_qubits(code, d);

  MixerDesign design;
  design.kind = "ppm";
  design.d = d;
  design.code = code;
  design.n_qubits = 2 * n;

  if (code.kind == CodeKind::SB) {
    append_conversion(design.gates, 0, n, /*sb_to_gray=*/true);
    append_conversion(design.gates, n, n, /*sb_to_gray=*/true);
  }

  const CodeSpec gray = CodeSpec::gray();
  for (int k = 0; k + 1 < d; ++k) {
    const std::uint32_t wa = encode_int(k, d, gray);
    const std::uint32_t wb = encode_int(k + 1, d, gray);
    const std::uint32_t diff = wa ^ wb;
    // Consecutive Gray codewords differ in exactly one bit.
    const int p = std::countr_zero(diff);
    std::vector<std::pair<int, bool>> ctrls;
    for (int q = 0; q < n; ++q) {
      if (q == p) continue;
      const bool bit = (wa >> q) & 1u;
      ctrls.emplace_back(q, bit);      // variable A register
      ctrls.emplace_back(n + q, bit);  // variable B register
    }
    if (ctrls.empty())
      design.gates.push_back(make_aphi_gate(p, n + p));
    else
      design.gates.push_back(make_caphi_gate(p, n + p, std::move(ctrls)));
  }

  if (code.kind == CodeKind::SB) {
    append_conversion(design.gates, 0, n, /*sb_to_gray=*/false);
    append_conversion(design.gates, n, n, /*sb_to_gray=*/false);
  }

  // Good states: encoded |k,l> with k != l, both < d.
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) {
      if (k == l) continue;
      const std::uint64_t s =
          encode_int(k, d, code) |
          (static_cast<std::uint64_t>(encode_int(l, d, code)) << n);
      design.valid_states.push_back(s);
    }
  std::sort(design.valid_states.begin(), design.valid_states.end());

  // Certificate from the composed unitary at generic angles.
  std::set<std::uint64_t> good(design.valid_states.begin(),
                               design.valid_states.end());
  std::vector<double> angles(design.num_parameters());
  for (std::size_t i = 0; i < angles.size(); ++i)
    angles[i] = kGenericAngle * (1.0 + 0.29 * static_cast<double>(i));
  const auto g = pmg_of(to_dense(design.instantiate(angles)));
  for (const auto& [u, v] : g.edges)
    if (good.count(u) && good.count(v)) design.union_edges.emplace_back(u, v);
  return design;
}

CriteriaReport verify_criteria(const MixerDesign& design, CriteriaKind kind) {
  CriteriaReport report;
  std::set<std::uint64_t> good(design.valid_states.begin(),
                               design.valid_states.end());

  if (kind == CriteriaKind::SingleVar) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> union_edges;
    for (const auto& g : design.gates) {
      for (const auto& [u, v] : g.pmg(design.n_qubits).edges) {
        const bool gu = good.count(u) != 0, gv = good.count(v) != 0;
        if (gu != gv)
          report.violations.push_back("gate '" + g.descriptor +
                                      "' links valid state " +
                                      std::to_string(gu ? u : v) +
                                      " to invalid state " +
                                      std::to_string(gu ? v : u));
        if (gu && gv) union_edges.insert({u, v});
      }
    }
    // Connectivity of the union on S_G.
    std::map<std::uint64_t, std::uint64_t> parent;
    for (std::uint64_t s : design.valid_states) parent[s] = s;
    std::function<std::uint64_t(std::uint64_t)> find =
        [&](std::uint64_t x) {
          while (parent[x] != x) x = parent[x] = parent[parent[x]];
          return x;
        };
    for (const auto& [u, v] : union_edges) parent[find(u)] = find(v);
    std::set<std::uint64_t> roots;
    for (std::uint64_t s : design.valid_states) roots.insert(find(s));
    if (roots.size() != 1)
      report.violations.push_back(
          "union graph on valid states has " + std::to_string(roots.size()) +
          " components");
    report.pass = report.violations.empty();
    return report;
  }

  // Composed-unitary checks; three angle sets guard accidental zeros.
  std::set<std::pair<std::uint64_t, std::uint64_t>> edges;
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<double> angles(design.num_parameters());
    for (std::size_t i = 0; i < angles.size(); ++i)
      angles[i] = kGenericAngle * (1.0 + 0.31 * static_cast<double>(i)) +
                  0.17 * trial;
    const auto g = pmg_of(to_dense(design.instantiate(angles)));
    edges.insert(g.edges.begin(), g.edges.end());
  }

  if (kind == CriteriaKind::Ppm) {
    const int n = design.n_qubits / 2;
    const std::uint64_t reg_mask = (std::uint64_t{1} << n) - 1;
    auto decode_pair = [&](std::uint64_t s) {
      const auto ka = try_decode_int(static_cast<std::uint32_t>(s & reg_mask),
                                     design.d, design.code);
      const auto kb = try_decode_int(
          static_cast<std::uint32_t>((s >> n) & reg_mask), design.d,
          design.code);
      return std::make_pair(ka, kb);
    };
    std::set<std::pair<int, int>> q_edges;
    for (const auto& [u, v] : edges) {
      const bool gu = good.count(u) != 0, gv = good.count(v) != 0;
      if (gu != gv) {
        report.violations.push_back("edge between good state " +
                                    std::to_string(gu ? u : v) +
                                    " and bad state " +
                                    std::to_string(gu ? v : u));
        continue;
      }
      if (!gu) continue;
      const auto [ua, ub] = decode_pair(u);
      const auto [va, vb] = decode_pair(v);
      if (*ua != *vb || *ub != *va) {
        report.violations.push_back(
            "good-good edge is not a |k,l> <-> |l,k> exchange: (" +
            std::to_string(*ua) + "," + std::to_string(*ub) + ") <-> (" +
            std::to_string(*va) + "," + std::to_string(*vb) + ")");
        continue;
      }
      q_edges.insert({std::min(*ua, *ub), std::max(*ua, *ub)});
    }
    // Pair graph Q on d nodes must be connected.
    std::vector<int> parent(design.d);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [a, b] : q_edges) parent[find(a)] = find(b);
    std::set<int> roots;
    for (int k = 0; k < design.d; ++k) roots.insert(find(k));
    if (roots.size() != 1)
      report.violations.push_back("pair graph Q has " +
                                  std::to_string(roots.size()) +
                                  " components");
    report.pass = report.violations.empty();
    return report;
  }

  // FullMixer: reachability under powers of the composed unitary.
  std::vector<double> angles(design.num_parameters());
  for (std::size_t i = 0; i < angles.size(); ++i)
    angles[i] = kGenericAngle * (1.0 + 0.23 * static_cast<double>(i));
  const DenseMatrix u = to_dense(design.instantiate(angles));
  const int r_max = std::max<int>(design.d,
                                  static_cast<int>(design.valid_states.size()));
  DenseMatrix power = DenseMatrix::Identity(u.rows(), u.cols());
  std::set<std::pair<std::uint64_t, std::uint64_t>> reached;
  for (int r = 1; r <= r_max; ++r) {
    power = u * power;
    for (std::uint64_t a : design.valid_states)
      for (std::uint64_t b : design.valid_states)
        if (a < b && std::abs(power(a, b)) > kStructuralTol)
          reached.insert({a, b});
  }
  for (std::uint64_t a : design.valid_states)
    for (std::uint64_t b : design.valid_states)
      if (a < b && !reached.count({a, b}))
        report.violations.push_back("no transition amplitude between " +
                                    std::to_string(a) + " and " +
                                    std::to_string(b) + " within " +
                                    std::to_string(r_max) + " powers");
  report.pass = report.violations.empty();
  return report;
}

double max_leakage_over_valid(const MixerDesign& design, int samples,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 2.0 * 3.14159265358979323846);
  const std::int64_t dim = std::int64_t{1} << design.n_qubits;
  double worst = 0.0;
  for (int trial = 0; trial < samples; ++trial) {
    std::vector<double> angles(design.num_parameters());
    for (auto& a : angles) a = dist(rng);
    const Circuit c = design.instantiate(angles);
    for (std::uint64_t s : design.valid_states) {
      DenseVector psi0 = DenseVector::Zero(dim);
      psi0[s] = 1.0;
      worst = std::max(worst, leakage(c, design.valid_states, psi0));
    }
  }
  return worst;
}

}  // namespace dqir
