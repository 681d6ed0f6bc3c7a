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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dqir/operator_poly.hpp"
#include "dqir/pauli.hpp"

namespace dqir {

enum class CodeKind { SB, Gray, Unary, DomainWall, BlockUnary };

/// An integer-to-bit code. Block unary carries its block size g and the
/// compact code used inside each block.
struct CodeSpec {
  CodeKind kind = CodeKind::SB;
  int block_size = 3;              // g, block unary only
  CodeKind block_local = CodeKind::Gray;  // SB or Gray, block unary only

  static CodeSpec sb() { return {CodeKind::SB}; }
  static CodeSpec gray() { return {CodeKind::Gray}; }
  static CodeSpec unary() { return {CodeKind::Unary}; }
  static CodeSpec domain_wall() { return {CodeKind::DomainWall}; }
  static CodeSpec block_unary(int g, CodeKind local = CodeKind::Gray) {
    return {CodeKind::BlockUnary, g, local};
  }

  bool is_compact() const {
    return kind == CodeKind::SB || kind == CodeKind::Gray;
  }

  std::string name() const;
  bool operator==(const CodeSpec&) const = default;
};

/// Qubits required to encode a d-level variable.
int code_qubits(const CodeSpec& code, int d);

/// Codeword of integer k under the code, as a bitmask (bit i = qubit i,
/// qubit 0 least significant / table-rightmost).
std::uint32_t encode_int(int k, int d, const CodeSpec& code);

/// Inverse of encode_int; rejects bitstrings outside the code image.
int decode_int(std::uint32_t word, int d, const CodeSpec& code);
std::optional<int> try_decode_int(std::uint32_t word, int d,
                                  const CodeSpec& code);

/// Codeword rendered most-significant-bit first, width = code_qubits.
std::string codeword_string(int k, int d, const CodeSpec& code);

/// Bitmask subset: the qubit indices on which the encoded primitive
/// |k><l| (or |k><k| when levels has one element) acts nontrivially.
/// The domain-wall rule is applied as stated, so the set may name the
/// index l == d-1 even though the register holds d-1 qubits; lowering
/// intersects with the physical register.
std::set<int> bitmask(const std::vector<int>& levels, int d,
                      const CodeSpec& code);

/// All d codewords in level order.
std::vector<std::uint32_t> valid_codewords(int d, const CodeSpec& code);

/// Per-variable code choices plus the derived contiguous qubit layout:
/// registers are laid out in domain declaration order, qubit 0 is the least
/// significant qubit of the first variable.
class EncodingAssignment {
 public:
  EncodingAssignment() = default;
  EncodingAssignment(const DomainSpec& domain,
                     std::map<std::string, CodeSpec> codes);

  /// Same code for every variable.
  static EncodingAssignment uniform(const DomainSpec& domain,
                                    const CodeSpec& code);

  const DomainSpec& domain() const { return domain_; }
  const CodeSpec& code_of(const std::string& var) const;
  int offset_of(const std::string& var) const;
  int register_width(const std::string& var) const;
  int total_qubits() const { return total_qubits_; }

  /// Encoded basis index of a full assignment tuple.
  std::uint64_t encode_state(const std::vector<int>& assignment) const;

  /// Decode an encoded basis index; nullopt when any register is invalid.
  std::optional<std::vector<int>> decode_state(std::uint64_t bits) const;

  /// All Prod d_a valid encoded basis indices, in domain tuple order.
  std::vector<std::uint64_t> valid_states() const;

 private:
  DomainSpec domain_;
  std::map<std::string, CodeSpec> codes_;
  std::map<std::string, int> offsets_;
  int total_qubits_ = 0;
};

/// Lower a single-variable primitive to a Pauli operator on the variable's
/// register within the assignment's layout. Entries are handled via
/// |k><l| -> tensor of |b><b'| on the bitmask qubits, then the standard
/// substitutions to I, X, Y, Z.
PauliPoly lower_primitive(const std::string& var, const LocalFactor& factor,
                          const EncodingAssignment& assignment);

/// Lower a full operator term-by-term and simplify. On valid codewords the
/// result reproduces the DQIR matrix elements; behavior on invalid states
/// is unconstrained.
PauliPoly lower_operator(const OperatorPoly& op,
                         const EncodingAssignment& assignment);

}  // namespace dqir
