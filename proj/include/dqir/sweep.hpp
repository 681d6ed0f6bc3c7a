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
#include <vector>

#include "dqir/circuits.hpp"
#include "dqir/encodings.hpp"
#include "dqir/operator_poly.hpp"

namespace dqir {

/// Deterministic operator families for the encoding-comparison sweep:
/// eq | number | number2 | fperm | fsum | coloring | tsp | sms.
/// (fss is encoding-dependent; see sweep_fss.)
OperatorPoly sweep_operator(const std::string& op, int d);

/// Single-variable validity penalty for the sweep; null for unary by
/// convention (validity-preserving mixers are assumed there).
PauliPoly sweep_fss(int d, const CodeSpec& code);

/// Lowered operator for one sweep cell.
PauliPoly sweep_lowered(const std::string& op, int d, const CodeSpec& code);

/// CSV body (header + sorted rows, no timestamp line) for op over the
/// cartesian product of encodings and d in [dmin, dmax].
std::string sweep_csv(const std::string& op,
                      const std::vector<std::string>& encodings, int dmin,
                      int dmax);

/// Encoding names accepted by the sweep: sb, gray, unary, dw, bu<g>[sb|gray].
CodeSpec parse_code_name(const std::string& name);

}  // namespace dqir
