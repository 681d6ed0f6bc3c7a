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
#include <Eigen/Dense>

#include "dqir/circuits.hpp"
#include "dqir/encodings.hpp"
#include "dqir/operator_poly.hpp"
#include "dqir/pauli.hpp"

namespace dqir {

using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

/// Full matrix of an operator on the domain's state space (variable 0 least
/// significant). Throws DimensionCapError above `dim_cap`.
DenseMatrix to_dense(const OperatorPoly& op,
                     std::int64_t dim_cap = kDenseDimCap);

/// Full matrix on 2^n_qubits dimensions (qubit 0 least significant).
DenseMatrix to_dense(const PauliPoly& p, std::int64_t dim_cap = kDenseDimCap);

/// Unitary of a circuit; macro gates are applied via their exact action.
DenseMatrix to_dense(const Circuit& c, std::int64_t dim_cap = kDenseDimCap);

/// Apply a single gate (primitive or macro) to a state vector in place.
void apply_gate(const Gate& g, DenseVector& psi);

/// Apply a whole circuit to a state vector in place.
void apply_circuit(const Circuit& c, DenseVector& psi);

/// P applied to a computational basis column, as a sparse map
/// basis-index -> amplitude.
std::map<std::uint64_t, cxd> apply_to_basis(const PauliPoly& p,
                                            std::uint64_t basis);

/// max over valid x, y of |<enc(x)| P |enc(y)> - <x| O |y>|: the
/// restricted-subspace deviation between a DQIR operator and its lowering.
double restricted_equiv(const OperatorPoly& op, const PauliPoly& p,
                        const EncodingAssignment& assignment,
                        std::int64_t dim_cap = kDenseDimCap);

/// Max elementwise deviation between the circuit unitary and exp(-i beta H).
/// Diagonal H uses an exact per-basis-state path (no dense matrices) when the
/// circuit is basis-preserving; otherwise both sides are built densely.
double exp_check(const PauliPoly& h, const Circuit& c, double beta,
                 std::int64_t dim_cap = kDenseDimCap);

/// exp(-i beta H) for Hermitian H via eigendecomposition.
DenseMatrix hermitian_exp(const DenseMatrix& h, double beta);

/// Leakage 1 - <psi|P|psi> of psi = U psi0 with respect to the feasible set
/// given as sorted basis indices. psi0 must lie in the feasible subspace.
double leakage(const Circuit& u, const std::vector<std::uint64_t>& feasible,
               const DenseVector& psi0);

/// Hermiticity / unitarity probes for dense matrices.
bool is_hermitian_dense(const DenseMatrix& m, double tol = kEquivTol);
bool is_unitary_dense(const DenseMatrix& m, double tol = kEquivTol);

}  // namespace dqir
