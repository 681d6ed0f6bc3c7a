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
#include <json.hpp>
#include <optional>
#include <string>
#include <variant>

#include "dqir/circuits.hpp"
#include "dqir/encodings.hpp"
#include "dqir/mixers.hpp"
#include "dqir/operator_poly.hpp"
#include "dqir/pauli.hpp"
#include "dqir/penalties.hpp"
#include "dqir/problems.hpp"

namespace dqir {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;

// Round-trips are bit-exact: coefficients serialize as [re, im] doubles and
// nlohmann emits shortest-round-trip decimal literals.
json to_json(const OperatorPoly& op);
OperatorPoly operator_poly_from_json(const json& j);

json to_json(const PauliPoly& p);
PauliPoly pauli_poly_from_json(const json& j);

json to_json(const Circuit& c);
Circuit circuit_from_json(const json& j);

json to_json(const CodeSpec& code);
CodeSpec code_spec_from_json(const json& j);

json to_json(const MixerDesign& d);

json to_json(const DepthReport& r);

/// Problem instance wrapper for the CLI job file.
struct ProblemSpec {
  std::string kind;  // coloring | tsp | sms | portfolio | ilp
  std::variant<ColoringInstance, TspInstance, SmsInstance, PortfolioInstance,
               IlpInstance>
      instance;

  DomainSpec domain() const;
  OperatorPoly cost() const;
};

ProblemSpec problem_from_json(const json& j);

/// Penalty request as written in a job file.
struct PenaltyRequest {
  std::string kind;  // perm | sum | lin | validity
  double weight = 1.0;
  // sum
  std::vector<cxd> level_coeffs;
  double target = 0.0;
  // lin
  std::map<std::string, double> row;
  double bound = 0.0;
  // validity
  std::string variable;
  bool allow_sparse = false;
};

PenaltyRequest penalty_from_json(const json& j);

struct JobFile {
  int schema_version = kSchemaVersion;
  std::optional<ProblemSpec> problem;
  std::vector<PenaltyRequest> penalties;
  std::map<std::string, CodeSpec> encoding;  // per variable; "*" = all
};

JobFile job_from_json(const json& j);

/// Encoding assignment for a job's domain ("*" entry applies to every
/// variable without an explicit code).
EncodingAssignment job_assignment(const JobFile& job, const DomainSpec& domain);

}  // namespace dqir
