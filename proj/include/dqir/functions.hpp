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
#include <string>
#include <utility>
#include <vector>

#include "dqir/operator_poly.hpp"

namespace dqir {

enum class BoolConnective { Not, And, Or, Xor, Implies, Linear };

/// Compose Hamiltonians of Boolean-valued functions:
///   not:      I - f
///   and:      f g
///   or:       f + g - f g
///   xor:      f + g - 2 f g
///   implies:  I - f + f g
///   linear:   a f + b g  (arbitrary weights; result may be non-Hermitian)
///
/// Operands other than `linear`'s must be diagonal with eigenvalues in {0,1}
/// (checked by enumeration for domains up to 4096 states).
OperatorPoly compose_bool(BoolConnective op, const OperatorPoly& f,
                          const OperatorPoly& g = OperatorPoly{},
                          cxd a = 1.0, cxd b = 1.0);

/// True when the operator is diagonal with spectrum in {0,1} within
/// kBooleanTol. Enumerates basis states; domains above `state_cap` are
/// checked structurally (diagonality) only.
bool is_boolean_valued(const OperatorPoly& f,
                       std::int64_t state_cap = kDenseDimCap);

/// EQ(a,b) = sum_k P(k)_a P(k)_b over the intersection of the two level sets.
OperatorPoly eq_op(const DomainSpec& domain, const std::string& alpha,
                   const std::string& beta);

/// NEQ = I - EQ.
OperatorPoly neq_op(const DomainSpec& domain, const std::string& alpha,
                    const std::string& beta);

/// All-equal over the listed variables (levels run over the smallest d).
OperatorPoly aeq_op(const DomainSpec& domain,
                    const std::vector<std::string>& vars);

/// All-different: prod over pairs of (I - EQ).
OperatorPoly ad_op(const DomainSpec& domain,
                   const std::vector<std::string>& vars);

/// Count-nonzero: M - sum_a P(0)_a.
OperatorPoly cnz_op(const DomainSpec& domain,
                    const std::vector<std::string>& vars);

/// Pairwise-different over the edges of a graph on the variables.
OperatorPoly pd_op(const DomainSpec& domain,
                   const std::vector<std::pair<std::string, std::string>>& edges);

/// Hermitian generator f (x) target, so that exp(-i phi gen) applies
/// exp(-i phi target) exactly on the subspace where the Boolean function f
/// holds. f and target must act on disjoint variable sets.
OperatorPoly controlled_generator(const OperatorPoly& f,
                                  const OperatorPoly& target);

/// Generator of a two-level swap: T(k<->l) - I on one variable. Its
/// exponential at phi = pi/2 implements the transposition (up to phase on
/// untouched levels when d > 2).
OperatorPoly transposition_generator(const DomainSpec& domain,
                                     const std::string& var, int k, int l);

}  // namespace dqir
