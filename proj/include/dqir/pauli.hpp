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
#include <vector>

#include "dqir/common.hpp"

namespace dqir {

/// One Pauli string: coeff * prod of single-qubit X/Y/Z factors, identity on
/// absent qubits. Qubit 0 is the least significant bit of a basis index.
struct PauliTerm {
  cxd coeff{1.0, 0.0};
  std::map<int, char> ops;  // qubit -> 'X' | 'Y' | 'Z'

  /// Canonical string over n qubits, character q = operator on qubit q.
  std::string to_string(int n_qubits) const;
  std::string key() const;
};

/// A weighted sum of Pauli strings on a fixed-width qubit register.
class PauliPoly {
 public:
  PauliPoly() = default;
  explicit PauliPoly(int n_qubits) : n_qubits_(n_qubits) {}
  PauliPoly(int n_qubits, std::vector<PauliTerm> terms)
      : n_qubits_(n_qubits), terms_(std::move(terms)) {}

  static PauliPoly identity(int n_qubits) {
    return PauliPoly(n_qubits, {PauliTerm{}});
  }

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::vector<PauliTerm>& terms() { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(PauliTerm t);

  /// Merge equal strings, prune |coeff| < 1e-12, sort terms canonically.
  PauliPoly simplified() const;

  PauliPoly adjointed() const;

  /// All coefficients real within tol after simplification.
  bool is_hermitian(double tol = kPruneTol) const;

  /// Every term built from Z factors only (or the identity).
  bool is_diagonal() const;

  /// Eigenvalue on a computational basis state (diagonal polys only).
  cxd eval_diagonal(std::uint64_t basis_state) const;

  /// Union of the terms' qubit supports.
  std::vector<int> support() const;

  std::string to_string() const;

  bool struct_equal(const PauliPoly& other) const;

 private:
  int n_qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

PauliPoly operator+(const PauliPoly& a, const PauliPoly& b);
PauliPoly operator-(const PauliPoly& a, const PauliPoly& b);
PauliPoly operator*(cxd s, const PauliPoly& a);

}  // namespace dqir
