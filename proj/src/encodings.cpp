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

#include "dqir/encodings.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace dqir {

namespace {

int ceil_log2(int x) {
  int n = 0;
  while ((1 << n) < x) ++n;
  return n;
}

std::uint32_t gray_encode(std::uint32_t k) { return k ^ (k >> 1); }

std::uint32_t gray_decode(std::uint32_t w) {
  std::uint32_t k = 0;
  for (; w; w >>= 1) k ^= w;
  return k;
}

std::uint32_t compact_encode(std::uint32_t k, CodeKind kind) {
  return kind == CodeKind::Gray ? gray_encode(k) : k;
}

std::uint32_t compact_decode(std::uint32_t w, CodeKind kind) {
  return kind == CodeKind::Gray ? gray_decode(w) : w;
}

struct BuShape {
  int blocks;
  int block_width;
};

BuShape bu_shape(const CodeSpec& code, int d) {
  const int g = code.block_size;
  return {(d + g - 1) / g, ceil_log2(g + 1)};
}

void check_value(int k, int d, const char* what) {
  if (k < 0 || k >= d)
    throw ContractError(std::string(what) + ": value " + std::to_string(k) +
                        " out of range for d=" + std::to_string(d));
}

}  // namespace

std::string CodeSpec::name() const {
  switch (kind) {
    case CodeKind::SB:
      return "sb";
    case CodeKind::Gray:
      return "gray";
    case CodeKind::Unary:
      return "unary";
    case CodeKind::DomainWall:
      return "dw";
    case CodeKind::BlockUnary:
      return "bu" + std::to_string(block_size) +
             (block_local == CodeKind::Gray ? "gray" : "sb");
  }
  return "?";
}

int code_qubits(const CodeSpec& code, int d) {
  if (d < 2) throw ContractError("code_qubits: d must be >= 2");
  switch (code.kind) {
    case CodeKind::SB:
    case CodeKind::Gray:
      return ceil_log2(d);
    case CodeKind::Unary:
      return d;
    case CodeKind::DomainWall:
      return d - 1;
    case CodeKind::BlockUnary: {
      if (code.block_size < 1)
        throw ContractError("code_qubits: block size must be >= 1");
      if (code.block_local != CodeKind::SB && code.block_local != CodeKind::Gray)
        throw ContractError("code_qubits: block-unary local code must be compact");
      const auto s = bu_shape(code, d);
      return s.blocks * s.block_width;
    }
  }
  throw ContractError("code_qubits: unknown code");
}

std::uint32_t encode_int(int k, int d, const CodeSpec& code) {
  check_value(k, d, "encode_int");
  switch (code.kind) {
    case CodeKind::SB:
      return static_cast<std::uint32_t>(k);
    case CodeKind::Gray:
      return gray_encode(static_cast<std::uint32_t>(k));
    case CodeKind::Unary:
      return 1u << k;
    case CodeKind::DomainWall:
      return (1u << k) - 1u;
    case CodeKind::BlockUnary: {
      const auto s = bu_shape(code, d);
      const int g = code.block_size;
      const int block = k / g;
      const std::uint32_t local = static_cast<std::uint32_t>(k % g) + 1u;
      return compact_encode(local, code.block_local) << (block * s.block_width);
    }
  }
  throw ContractError("encode_int: unknown code");
}

std::optional<int> try_decode_int(std::uint32_t word, int d,
                                  const CodeSpec& code) {
  const int nq = code_qubits(code, d);
  if (nq < 32 && (word >> nq) != 0u) return std::nullopt;
  switch (code.kind) {
    case CodeKind::SB:
      return word < static_cast<std::uint32_t>(d)
                 ? std::optional<int>(static_cast<int>(word))
                 : std::nullopt;
    case CodeKind::Gray: {
      const std::uint32_t k = gray_decode(word);
      return k < static_cast<std::uint32_t>(d)
                 ? std::optional<int>(static_cast<int>(k))
                 : std::nullopt;
    }
    case CodeKind::Unary: {
      if (std::popcount(word) != 1) return std::nullopt;
      const int k = std::countr_zero(word);
      return k < d ? std::optional<int>(k) : std::nullopt;
    }
    case CodeKind::DomainWall: {
      // k ones in the low positions: word + 1 must be a power of two.
      if ((word & (word + 1u)) != 0u) return std::nullopt;
      const int k = std::popcount(word);
      return k < d ? std::optional<int>(k) : std::nullopt;
    }
    case CodeKind::BlockUnary: {
      const auto s = bu_shape(code, d);
      const int g = code.block_size;
      const std::uint32_t mask = (1u << s.block_width) - 1u;
      int hit_block = -1;
      std::uint32_t hit_local = 0;
      for (int b = 0; b < s.blocks; ++b) {
        const std::uint32_t bits = (word >> (b * s.block_width)) & mask;
        const std::uint32_t local = compact_decode(bits, code.block_local);
        if (local == 0) continue;
        if (hit_block >= 0) return std::nullopt;  // two occupied blocks
        hit_block = b;
        hit_local = local;
      }
      if (hit_block < 0) return std::nullopt;  // all blocks empty
      if (hit_local > static_cast<std::uint32_t>(g)) return std::nullopt;
      const int k = hit_block * g + static_cast<int>(hit_local) - 1;
      return k < d ? std::optional<int>(k) : std::nullopt;
    }
  }
  return std::nullopt;
}

int decode_int(std::uint32_t word, int d, const CodeSpec& code) {
  if (auto k = try_decode_int(word, d, code)) return *k;
  throw ContractError("decode_int: bitstring is not a valid " + code.name() +
                      " codeword for d=" + std::to_string(d));
}

std::string codeword_string(int k, int d, const CodeSpec& code) {
  const int nq = code_qubits(code, d);
  const std::uint32_t w = encode_int(k, d, code);
  std::string s(nq, '0');
  for (int i = 0; i < nq; ++i)
    if ((w >> i) & 1u) s[nq - 1 - i] = '1';
  return s;
}

std::set<int> bitmask(const std::vector<int>& levels, int d,
                      const CodeSpec& code) {
  if (levels.empty() || levels.size() > 2)
    throw ContractError("bitmask: expected one or two levels");
  for (int k : levels) check_value(k, d, "bitmask");
  const int nq = code_qubits(code, d);
  std::set<int> out;
  const bool diagonal = levels.size() == 1 || levels[0] == levels[1];
  const int k = std::min(levels.front(), levels.back());
  const int l = std::max(levels.front(), levels.back());
  switch (code.kind) {
    case CodeKind::SB:
    case CodeKind::Gray:
      for (int q = 0; q < nq; ++q) out.insert(q);
      return out;
    case CodeKind::Unary:
      out.insert(k);
      if (!diagonal) out.insert(l);
      return out;
    case CodeKind::DomainWall:
      if (diagonal) {
        if (k > 0) out.insert(k - 1);
        if (k < d - 1) out.insert(k);
      } else {
        // {k-1, k, ..., l-1, l}; k-1 only if k != 0, l only if l != d.
        if (k > 0) out.insert(k - 1);
        for (int q = k; q < l; ++q) out.insert(q);
        if (l != d) out.insert(l);
      }
      return out;
    case CodeKind::BlockUnary: {
      const auto s = bu_shape(code, d);
      const int g = code.block_size;
      auto add_block = [&](int b) {
        for (int q = 0; q < s.block_width; ++q)
          out.insert(b * s.block_width + q);
      };
      add_block(k / g);
      if (!diagonal) add_block(l / g);
      return out;
    }
  }
  throw ContractError("bitmask: unknown code");
}

std::vector<std::uint32_t> valid_codewords(int d, const CodeSpec& code) {
  std::vector<std::uint32_t> out;
  out.reserve(d);
  for (int k = 0; k < d; ++k) out.push_back(encode_int(k, d, code));
  return out;
}

EncodingAssignment::EncodingAssignment(const DomainSpec& domain,
                                       std::map<std::string, CodeSpec> codes)
    : domain_(domain), codes_(std::move(codes)) {
  int offset = 0;
  for (const auto& v : domain_.variables()) {
    auto it = codes_.find(v.id);
    if (it == codes_.end())
      throw ContractError("EncodingAssignment: variable '" + v.id +
                          "' has no code assigned");
    offsets_[v.id] = offset;
    offset += code_qubits(it->second, v.dim);
  }
  total_qubits_ = offset;
}

EncodingAssignment EncodingAssignment::uniform(const DomainSpec& domain,
                                               const CodeSpec& code) {
  std::map<std::string, CodeSpec> codes;
  for (const auto& v : domain.variables()) codes[v.id] = code;
  return EncodingAssignment(domain, std::move(codes));
}

const CodeSpec& EncodingAssignment::code_of(const std::string& var) const {
  auto it = codes_.find(var);
  if (it == codes_.end())
    throw ContractError("EncodingAssignment: variable '" + var +
                        "' has no code assigned");
  return it->second;
}

int EncodingAssignment::offset_of(const std::string& var) const {
  auto it = offsets_.find(var);
  if (it == offsets_.end())
    throw ContractError("EncodingAssignment: unknown variable '" + var + "'");
  return it->second;
}

int EncodingAssignment::register_width(const std::string& var) const {
  return code_qubits(code_of(var), domain_.dim_of(var));
}

std::uint64_t EncodingAssignment::encode_state(
    const std::vector<int>& assignment) const {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    const auto& v = domain_.variables()[i];
    const std::uint64_t w = encode_int(assignment[i], v.dim, code_of(v.id));
    bits |= w << offset_of(v.id);
  }
  return bits;
}

std::optional<std::vector<int>> EncodingAssignment::decode_state(
    std::uint64_t bits) const {
  std::vector<int> out(domain_.size());
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    const auto& v = domain_.variables()[i];
    const int w = register_width(v.id);
    const std::uint32_t reg =
        static_cast<std::uint32_t>((bits >> offset_of(v.id)) &
                                   ((std::uint64_t{1} << w) - 1));
    auto k = try_decode_int(reg, v.dim, code_of(v.id));
    if (!k) return std::nullopt;
    out[i] = *k;
  }
  return out;
}

std::vector<std::uint64_t> EncodingAssignment::valid_states() const {
  const std::int64_t n = domain_.state_count();
  std::vector<std::uint64_t> out;
  out.reserve(n);
  for (std::int64_t s = 0; s < n; ++s)
    out.push_back(encode_state(domain_.state_tuple(s)));
  return out;
}

namespace {

struct QubitEntry {
  int qubit;  // absolute index
  int b;      // ket bit
  int bp;     // bra bit
};

// Qubits the encoded |k><l| acts on (relative to the register), with bit
// values taken from the codewords. The domain-wall set is the stated rule
// clamped to the physical register.
std::vector<QubitEntry> entry_support(int k, int l, int d,
                                      const CodeSpec& code, int offset) {
  const int nq = code_qubits(code, d);
  const std::uint32_t wk = encode_int(k, d, code);
  const std::uint32_t wl = encode_int(l, d, code);
  std::vector<int> qubits;
  switch (code.kind) {
    case CodeKind::SB:
    case CodeKind::Gray:
      for (int q = 0; q < nq; ++q) qubits.push_back(q);
      break;
    case CodeKind::Unary:
      qubits.push_back(std::min(k, l));
      if (k != l) qubits.push_back(std::max(k, l));
      break;
    case CodeKind::DomainWall: {
      const int lo = std::min(k, l), hi = std::max(k, l);
      if (k == l) {
        if (lo > 0) qubits.push_back(lo - 1);
        if (lo < d - 1) qubits.push_back(lo);
      } else {
        if (lo > 0) qubits.push_back(lo - 1);
        for (int q = lo; q <= std::min(hi, d - 2); ++q) qubits.push_back(q);
      }
      break;
    }
    case CodeKind::BlockUnary: {
      const int g = code.block_size;
      const int bw = bu_shape(code, d).block_width;
      const int bk = std::min(k, l) / g;
      const int bl = std::max(k, l) / g;
      for (int q = 0; q < bw; ++q) qubits.push_back(bk * bw + q);
      if (bl != bk)
        for (int q = 0; q < bw; ++q) qubits.push_back(bl * bw + q);
      break;
    }
  }
  std::vector<QubitEntry> out;
  out.reserve(qubits.size());
  for (int q : qubits)
    out.push_back({offset + q, static_cast<int>((wk >> q) & 1u),
                   static_cast<int>((wl >> q) & 1u)});
  return out;
}

// Expand coeff * prod_i |b_i><b'_i| into Pauli terms and accumulate.
void accumulate_entry(std::map<std::string, PauliTerm>& acc, cxd coeff,
                      const std::vector<QubitEntry>& entries) {
  struct Option {
    char op;  // 'I', 'X', 'Y', 'Z'
    cxd weight;
  };
  std::vector<std::array<Option, 2>> options;
  options.reserve(entries.size());
  for (const auto& e : entries) {
    if (e.b == e.bp) {
      const double sign = e.b ? -0.5 : 0.5;
      options.push_back({Option{'I', 0.5}, Option{'Z', sign}});
    } else if (e.b == 0) {  // |0><1| = (X + iY)/2
      options.push_back({Option{'X', 0.5}, Option{'Y', cxd{0.0, 0.5}}});
    } else {  // |1><0| = (X - iY)/2
      options.push_back({Option{'X', 0.5}, Option{'Y', cxd{0.0, -0.5}}});
    }
  }
  const std::size_t n = entries.size();
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << n); ++sel) {
    PauliTerm t;
    t.coeff = coeff;
    for (std::size_t i = 0; i < n; ++i) {
      const Option& o = options[i][(sel >> i) & 1ull];
      t.coeff *= o.weight;
      if (o.op != 'I') t.ops[entries[i].qubit] = o.op;
    }
    auto key = t.key();
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(std::move(key), std::move(t));
    else
      it->second.coeff += t.coeff;
  }
}

std::vector<PauliTerm> lower_factor_terms(const std::string& var,
                                          const LocalFactor& factor,
                                          const EncodingAssignment& assignment) {
  const int d = assignment.domain().dim_of(var);
  const CodeSpec& code = assignment.code_of(var);
  const int offset = assignment.offset_of(var);
  std::map<std::string, PauliTerm> acc;
  const auto& m = factor.matrix();
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) {
      if (m(k, l) == cxd{0.0, 0.0}) continue;
      accumulate_entry(acc, m(k, l), entry_support(k, l, d, code, offset));
    }
  std::vector<PauliTerm> out;
  out.reserve(acc.size());
  for (auto& [key, t] : acc)
    if (std::abs(t.coeff) > kPruneTol) out.push_back(std::move(t));
  return out;
}

}  // namespace

PauliPoly lower_primitive(const std::string& var, const LocalFactor& factor,
                          const EncodingAssignment& assignment) {
  if (factor.dim() != assignment.domain().dim_of(var))
    throw ContractError("lower_primitive: factor dimension mismatch");
  return PauliPoly(assignment.total_qubits(),
                   lower_factor_terms(var, factor, assignment))
      .simplified();
}

PauliPoly lower_operator(const OperatorPoly& op,
                         const EncodingAssignment& assignment) {
  if (!(op.domain() == assignment.domain()))
    throw ContractError("lower_operator: operator and assignment domains differ");
  std::map<std::string, PauliTerm> acc;
  for (const auto& term : op.terms()) {
    // Cross product of the per-variable lowerings; registers are disjoint,
    // so strings combine by union.
    std::vector<PauliTerm> partial{PauliTerm{term.coeff, {}}};
    for (const auto& [var, factor] : term.factors) {
      const auto lowered = lower_factor_terms(var, factor, assignment);
      std::vector<PauliTerm> next;
      next.reserve(partial.size() * lowered.size());
      for (const auto& p : partial)
        for (const auto& q : lowered) {
          PauliTerm t = p;
          t.coeff *= q.coeff;
          t.ops.insert(q.ops.begin(), q.ops.end());
          next.push_back(std::move(t));
        }
      partial = std::move(next);
    }
    for (auto& t : partial) {
      auto key = t.key();
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(std::move(key), std::move(t));
      else
        it->second.coeff += t.coeff;
    }
  }
  std::vector<PauliTerm> out;
  out.reserve(acc.size());
  for (auto& [key, t] : acc)
    if (std::abs(t.coeff) > kPruneTol) out.push_back(std::move(t));
  return PauliPoly(assignment.total_qubits(), std::move(out)).simplified();
}

}  // namespace dqir
