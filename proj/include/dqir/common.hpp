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
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dqir {

using cxd = std::complex<double>;

/// Coefficients with magnitude below this are dropped during simplification.
constexpr double kPruneTol = 1e-12;

/// Tolerance for validating that an operator represents a {0,1}-valued
/// function.
constexpr double kBooleanTol = 1e-9;

/// Tolerance for dense equivalence checks (lowering, exponentials).
constexpr double kEquivTol = 1e-9;

/// Magnitude threshold for the structural sparsity test behind partial
/// mixer graphs.
constexpr double kStructuralTol = 1e-10;

/// Generic angle used when probing the sparsity pattern of a parameterized
/// unitary. Cross-checked at two further angles to guard accidental zeros.
constexpr double kGenericAngle = 0.7345;

/// Default cap on dense matrix dimension (2^12). Overridable per call site
/// or via the DQIR_DENSE_CAP environment variable in the CLI.
constexpr std::int64_t kDenseDimCap = 4096;

/// Seed for reproducible random-angle sampling in mixer strictness checks.
constexpr std::uint64_t kAngleSeed = 0xD41Dull;

/// Violation of an operation's contract (bad arguments, domain mismatch,
/// non-Boolean operand where one is required, ...).
class ContractError : public std::invalid_argument {
 public:
  explicit ContractError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// A dense computation was requested above the dimension cap.
class DimensionCapError : public std::runtime_error {
 public:
  explicit DimensionCapError(const std::string& what)
      : std::runtime_error(what) {}
};

/// The gate library could not produce a mixer meeting the design criteria.
class LibraryInsufficientError : public std::runtime_error {
 public:
  LibraryInsufficientError(const std::string& what, int best_components)
      : std::runtime_error(what), best_components(best_components) {}
  int best_components;
};

}  // namespace dqir
