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
#include <string>
#include <vector>

#include "dqir/common.hpp"

namespace dqir {

/// One discrete variable: an opaque id and a level count d >= 2.
struct Variable {
  std::string id;
  int dim = 0;

  bool operator==(const Variable&) const = default;
};

/// An ordered set of discrete variables. Declaration order fixes the tensor
/// product layout everywhere downstream: variable 0 is the least significant
/// digit of a basis-state index.
class DomainSpec {
 public:
  DomainSpec() = default;

  explicit DomainSpec(std::vector<Variable> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const auto& v = vars_[i];
      if (v.dim < 2)
        throw ContractError("DomainSpec: variable '" + v.id +
                            "' has cardinality " + std::to_string(v.dim) +
                            " (must be >= 2)");
      if (!index_.emplace(v.id, i).second)
        throw ContractError("DomainSpec: duplicate variable id '" + v.id +
                            "'");
    }
  }

  /// Uniform domain: variables named by a prefix + index, all of size d.
  static DomainSpec uniform(int count, int d, const std::string& prefix = "x") {
    std::vector<Variable> vars;
    vars.reserve(count);
    for (int i = 0; i < count; ++i)
      vars.push_back({prefix + std::to_string(i), d});
    return DomainSpec(std::move(vars));
  }

  const std::vector<Variable>& variables() const { return vars_; }
  std::size_t size() const { return vars_.size(); }

  bool has(const std::string& id) const { return index_.count(id) != 0; }

  std::size_t index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
      throw ContractError("DomainSpec: unknown variable '" + id + "'");
    return it->second;
  }

  int dim_of(const std::string& id) const {
    return vars_[index_of(id)].dim;
  }

  /// Total number of classical states, Prod d_a. Saturates at int64 max.
  std::int64_t state_count() const {
    std::int64_t n = 1;
    for (const auto& v : vars_) {
      if (n > (std::int64_t{1} << 62) / v.dim) return std::int64_t{1} << 62;
      n *= v.dim;
    }
    return n;
  }

  /// Mixed-radix index of the assignment tuple, variable 0 least significant.
  std::int64_t state_index(const std::vector<int>& assignment) const {
    std::int64_t idx = 0, stride = 1;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      idx += stride * assignment[i];
      stride *= vars_[i].dim;
    }
    return idx;
  }

  std::vector<int> state_tuple(std::int64_t index) const {
    std::vector<int> t(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      t[i] = static_cast<int>(index % vars_[i].dim);
      index /= vars_[i].dim;
    }
    return t;
  }

  bool operator==(const DomainSpec& other) const {
    return vars_ == other.vars_;
  }

 private:
  std::vector<Variable> vars_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace dqir
