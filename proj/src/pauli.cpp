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

#include "dqir/pauli.hpp"

#include <algorithm>
#include <sstream>

namespace dqir {

std::string PauliTerm::to_string(int n_qubits) const {
  std::string s(n_qubits, 'I');
  for (const auto& [q, op] : ops) {
    if (q >= 0 && q < n_qubits) s[q] = op;
  }
  return s;
}

std::string PauliTerm::key() const {
  std::string out;
  for (const auto& [q, op] : ops) {
    out += std::to_string(q);
    out.push_back(op);
  }
  return out;
}

void PauliPoly::add_term(PauliTerm t) {
  for (const auto& [q, op] : t.ops) {
    if (q < 0 || q >= n_qubits_)
      throw ContractError("PauliPoly: qubit index " + std::to_string(q) +
                          " out of range");
    if (op != 'X' && op != 'Y' && op != 'Z')
      throw ContractError("PauliPoly: invalid Pauli letter");
  }
  terms_.push_back(std::move(t));
}

PauliPoly PauliPoly::simplified() const {
  std::map<std::string, PauliTerm> by_key;
  for (const auto& t : terms_) {
    auto key = t.key();
    auto it = by_key.find(key);
    if (it == by_key.end())
      by_key.emplace(std::move(key), t);
    else
      it->second.coeff += t.coeff;
  }
  std::vector<PauliTerm> out;
  out.reserve(by_key.size());
  for (auto& [k, t] : by_key)
    if (std::abs(t.coeff) > kPruneTol) out.push_back(std::move(t));
  return PauliPoly(n_qubits_, std::move(out));
}

PauliPoly PauliPoly::adjointed() const {
  PauliPoly out(n_qubits_);
  for (const auto& t : terms_) {
    PauliTerm a = t;
    a.coeff = std::conj(t.coeff);
    out.terms_.push_back(std::move(a));
  }
  return out;
}

bool PauliPoly::is_hermitian(double tol) const {
  const PauliPoly s = simplified();
  for (const auto& t : s.terms())
    if (std::abs(t.coeff.imag()) > tol) return false;
  return true;
}

bool PauliPoly::is_diagonal() const {
  for (const auto& t : terms_)
    for (const auto& [q, op] : t.ops)
      if (op != 'Z') return false;
  return true;
}

cxd PauliPoly::eval_diagonal(std::uint64_t basis_state) const {
  cxd total{0.0, 0.0};
  for (const auto& t : terms_) {
    double sign = 1.0;
    for (const auto& [q, op] : t.ops) {
      if (op != 'Z')
        throw ContractError("eval_diagonal: poly is not diagonal");
      if ((basis_state >> q) & 1ull) sign = -sign;
    }
    total += sign * t.coeff;
  }
  return total;
}

std::vector<int> PauliPoly::support() const {
  std::vector<int> qs;
  for (const auto& t : terms_)
    for (const auto& [q, op] : t.ops) qs.push_back(q);
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  return qs;
}

std::string PauliPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.coeff.real();
    if (t.coeff.imag() != 0.0)
      os << (t.coeff.imag() < 0 ? "" : "+") << t.coeff.imag() << "i";
    os << ") " << t.to_string(n_qubits_);
  }
  return os.str();
}

bool PauliPoly::struct_equal(const PauliPoly& other) const {
  if (n_qubits_ != other.n_qubits_) return false;
  const auto a = simplified().terms();
  const auto b = other.simplified().terms();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].coeff != b[i].coeff || a[i].key() != b[i].key()) return false;
  return true;
}

PauliPoly operator+(const PauliPoly& a, const PauliPoly& b) {
  if (a.n_qubits() != b.n_qubits())
    throw ContractError("PauliPoly add: register widths differ");
  std::vector<PauliTerm> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return PauliPoly(a.n_qubits(), std::move(terms)).simplified();
}

PauliPoly operator-(const PauliPoly& a, const PauliPoly& b) {
  return a + (cxd{-1.0, 0.0} * b);
}

PauliPoly operator*(cxd s, const PauliPoly& a) {
  PauliPoly out = a;
  for (auto& t : out.terms()) t.coeff *= s;
  return out.simplified();
}

}  // namespace dqir
