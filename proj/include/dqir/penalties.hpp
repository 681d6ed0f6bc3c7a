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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dqir/encodings.hpp"
#include "dqir/operator_poly.hpp"
#include "dqir/pauli.hpp"

namespace dqir {

/// Pair permutation penalty: sum over ordered variable pairs and levels of
/// P(k)_a P(k)_b. Zero exactly on permutation strings; each duplicated value
/// contributes per ordered pair (so a single duplicate costs 2).
OperatorPoly f_perm(const DomainSpec& domain);

/// Squared-sum penalty (sum_a A_a - D)^2 with per-level coefficients.
OperatorPoly f_sum(const DomainSpec& domain,
                   const std::vector<cxd>& level_coeffs, double target);

/// Default cap on the number of variables a linear-constraint row may touch;
/// the term count grows exponentially with the row support.
constexpr int kLinRowSupportCap = 12;

/// Indicator-product penalty for one linear constraint row
/// sum_a coeff_a * x_a <= bound: eigenvalue 1 on every violating assignment
/// of the row's support, 0 otherwise.
OperatorPoly f_lin(const DomainSpec& domain,
                   const std::map<std::string, double>& row, double bound,
                   int support_cap = kLinRowSupportCap);

/// Single-variable validity penalty, emitted at the qubit level because
/// invalid states exist only after encoding.
///
/// Compact codes penalize each codeword beyond d; block unary penalizes
/// locally invalid block values (null when d is divisible by g); sparse
/// codes (unary, domain wall) produce large projectors and are only
/// generated behind `allow_sparse`.
PauliPoly f_ss(const std::string& var, const EncodingAssignment& assignment,
               bool allow_sparse = false);

/// Either an unencoded penalty or an already-lowered one.
using PenaltyOperator = std::variant<OperatorPoly, PauliPoly>;

struct WeightedPenalty {
  double weight = 1.0;  // chi > 0
  PenaltyOperator op;
};

/// H_eff = H_C + sum_j chi_j F_j. When any operand is a PauliPoly the cost
/// and all DQIR penalties are lowered first, which requires an assignment.
PenaltyOperator effective_cost(
    const OperatorPoly& cost, const std::vector<WeightedPenalty>& penalties,
    const std::optional<EncodingAssignment>& assignment = std::nullopt);

}  // namespace dqir
