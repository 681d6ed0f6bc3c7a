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
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dqir/circuits.hpp"
#include "dqir/encodings.hpp"
#include "dqir/functions.hpp"
#include "dqir/simulator.hpp"

namespace dqir {

// --- DQIR-level mixer generators ---

/// Shift partial mixer Hamiltonian: sum_k T(k <-> k-1) on one variable.
OperatorPoly shift_generator(const DomainSpec& domain, const std::string& var);

/// Shift plus the wrap-around term T(0 <-> d-1).
OperatorPoly ring_generator(const DomainSpec& domain, const std::string& var);

/// Standard partial permutation mixer generator on two equal-d variables:
/// sum_k |k><k-1| (x) |k-1><k| + h.c.
OperatorPoly sppm_generator(const DomainSpec& domain, const std::string& a,
                            const std::string& b);

/// First-order product-formula circuit of exp(-i beta G) for an encoded
/// Hermitian generator. Leakage is generally nonzero for non-diagonal G.
Circuit trotter_mixer(const OperatorPoly& generator,
                      const EncodingAssignment& assignment, double beta);

// --- partial mixer graphs ---

/// Graph on encoded basis states whose edges mark structurally nonzero
/// off-diagonal unitary entries.
struct PartialMixerGraph {
  std::uint64_t n_states = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;  // u < v
};

/// Edges of a dense unitary above the structural tolerance.
PartialMixerGraph pmg_of(const DenseMatrix& u);

// --- gate templates and mixer designs ---

/// A library element: a parameterized gate plus its ranking metadata.
struct MixerGate {
  Gate proto;                // angle field ignored when parameterized
  bool parameterized = true; // fixed Cliffords (basis conversions) are not
  int depth_cost = 1;        // ranking cost; model values follow the
                             // controlled-rotation depth table
  std::string descriptor;    // stable id for deterministic tie-breaking

  Gate instantiate(double angle) const;

  /// Structural PMG of this gate on an n-qubit register (angle-free).
  PartialMixerGraph pmg(int n_qubits) const;
};

MixerGate make_rx_gate(int qubit);
MixerGate make_mcry_gate(int target, std::vector<std::pair<int, bool>> ctrls);
MixerGate make_aphi_gate(int a, int b);
MixerGate make_caphi_gate(int a, int b,
                          std::vector<std::pair<int, bool>> ctrls);
MixerGate make_cnot_fixed(int control, int target);

/// All multi-controlled R_Y gates on an n-qubit register: every target,
/// every control subset, every polarity.
std::vector<MixerGate> default_gdpm_library(int n_qubits);

struct MixerDesign {
  std::string kind;  // "sbm" | "gdpm" | "ppm"
  int d = 0;
  CodeSpec code;
  int n_qubits = 0;
  std::vector<MixerGate> gates;

  // strictness certificate
  std::vector<std::uint64_t> valid_states;  // S_G
  std::vector<std::pair<std::uint64_t, std::uint64_t>> union_edges;

  std::size_t num_parameters() const;

  /// Circuit at the given per-gate angles (macro gates, not yet decomposed).
  Circuit instantiate(const std::vector<double>& angles) const;

  /// Fully decomposed depth at a generic angle assignment.
  int decomposed_depth() const;
};

/// Single-variable strict mixer search following the graph-union algorithm:
/// drop library members with S_G-S_B edges, induce on S_G, then grow unions
/// keeping minimum-component candidates until one is connected. Powers of
/// two short-circuit to the single-layer R_X product. Throws
/// LibraryInsufficientError (with the best component count reached) on
/// exhaustion.
MixerDesign gdpm_search(int d, const CodeSpec& code,
                        const std::vector<MixerGate>& library = {});

/// Two-variable partial permutation mixer for Gray (controlled A_phi per
/// adjacent value pair, controls on the shared bits) or SB (the Gray design
/// wrapped in basis-conversion CNOT layers). 2 <= d <= 16.
MixerDesign ppm_construct(int d, const CodeSpec& code);

enum class CriteriaKind { SingleVar, Ppm, FullMixer };

struct CriteriaReport {
  bool pass = false;
  std::vector<std::string> violations;
};

/// single_var: no S_G-S_B edges in any member PMG and a connected union on
/// S_G. ppm: checked on the composed unitary -- good/bad separation, only
/// |k,l> <-> |l,k> edges, pair graph connected. full_mixer: every feasible
/// pair reachable by some power r <= max(d, |S_G|) of the composed unitary.
CriteriaReport verify_criteria(const MixerDesign& design, CriteriaKind kind);

/// Max leakage over every valid basis state at `samples` seeded random
/// angle vectors. Strict designs report <= 1e-10.
double max_leakage_over_valid(const MixerDesign& design, int samples = 100,
                              std::uint64_t seed = kAngleSeed);

}  // namespace dqir
