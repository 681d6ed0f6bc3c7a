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
//
// dqirc: batch pipeline over discrete-optimization operators.
//   problem -> encode -> lower -> circuit -> report / mixer / verify
// Exit codes: 0 success, 1 failed verification, 2 contract violation,
// 3 mixer library insufficient, 4 dimension cap exceeded.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "dqir/json_io.hpp"
#include "dqir/penalties.hpp"
#include "dqir/simulator.hpp"
#include "dqir/sweep.hpp"

using namespace dqir;

namespace {

std::int64_t dense_cap() {
  if (const char* env = std::getenv("DQIR_DENSE_CAP")) {
    const long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return kDenseDimCap;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ContractError("cannot write file: " + path);
  out << text;
}

void write_json(const std::string& path, const json& j) {
  write_text(path, j.dump(2) + "\n");
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

// DQIR-level effective cost of a job (validity penalties excluded).
OperatorPoly job_dqir_cost(const JobFile& job) {
  if (!job.problem) throw ContractError("job file has no problem section");
  const auto dom = job.problem->domain();
  OperatorPoly cost = job.problem->cost();
  std::vector<WeightedPenalty> dqir_penalties;
  for (const auto& p : job.penalties) {
    if (p.kind == "perm")
      dqir_penalties.push_back({p.weight, f_perm(dom)});
    else if (p.kind == "sum")
      dqir_penalties.push_back({p.weight, f_sum(dom, p.level_coeffs, p.target)});
    else if (p.kind == "lin")
      dqir_penalties.push_back({p.weight, f_lin(dom, p.row, p.bound)});
  }
  return std::get<OperatorPoly>(effective_cost(cost, dqir_penalties));
}

PauliPoly job_lowered(const JobFile& job) {
  const auto dom = job.problem->domain();
  const auto assign = job_assignment(job, dom);
  PauliPoly lowered = lower_operator(job_dqir_cost(job), assign);
  for (const auto& p : job.penalties) {
    if (p.kind != "validity") continue;
    lowered = lowered + cxd{p.weight, 0.0} *
                            f_ss(p.variable, assign, p.allow_sparse);
  }
  return lowered.simplified();
}

int run_problem(const std::string& job_path, const std::string& out) {
  const JobFile job = job_from_json(read_json_file(job_path));
  json j = to_json(job_dqir_cost(job));
  if (job.problem->kind == "ilp")
    j["objective_sense"] = "max";  // operator carries +c.x
  write_json(out, j);
  return 0;
}

int run_encode(int d, const std::string& code_name, const std::string& out) {
  const CodeSpec code = parse_code_name(code_name);
  json rows = json::array();
  for (int k = 0; k < d; ++k) rows.push_back(codeword_string(k, d, code));
  write_json(out, json{{"d", d},
                       {"code", to_json(code)},
                       {"n_qubits", code_qubits(code, d)},
                       {"codewords", rows}});
  return 0;
}

int run_lower(const std::string& job_path, const std::string& out) {
  const JobFile job = job_from_json(read_json_file(job_path));
  write_json(out, to_json(job_lowered(job)));
  return 0;
}

int run_circuit(const std::string& job_path, double beta, bool expand,
                const std::string& out) {
  const JobFile job = job_from_json(read_json_file(job_path));
  Circuit c = emit_product_formula(job_lowered(job), beta);
  if (expand) c = expanded(c);
  write_json(out, to_json(c));
  return 0;
}

int run_report(const std::string& op, const std::string& encodings, int dmin,
               int dmax, bool timestamp, const std::string& out) {
  std::ostringstream csv;
  if (timestamp) {
    const auto now = std::chrono::system_clock::to_time_t(
        std::chrono::system_clock::now());
    csv << "# generated " << std::put_time(std::gmtime(&now), "%FT%TZ")
        << "\n";
  }
  csv << sweep_csv(op, split_csv(encodings), dmin, dmax);
  write_text(out, csv.str());
  return 0;
}

int run_mixer(int d, const std::string& code_name, bool ppm,
              const std::string& out) {
  const CodeSpec code = parse_code_name(code_name);
  const MixerDesign design =
      ppm ? ppm_construct(d, code) : gdpm_search(d, code);
  json j = to_json(design);
  j["decomposed_depth"] = design.decomposed_depth();
  write_json(out, j);
  return 0;
}

int run_verify(const std::string& job_path) {
  const JobFile job = job_from_json(read_json_file(job_path));
  const auto dom = job.problem->domain();
  const auto assign = job_assignment(job, dom);
  bool all_pass = true;
  auto row = [&](const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    all_pass = all_pass && pass;
  };

  const auto cost = job_dqir_cost(job);
  const auto lowered = lower_operator(cost, assign);
  {
    const double dev = restricted_equiv(cost, lowered, assign, dense_cap());
    std::ostringstream os;
    os << "max deviation " << std::scientific << std::setprecision(2) << dev;
    row("restricted equivalence of the lowered cost", dev <= kEquivTol,
        os.str());
  }
  {
    const Circuit c = expanded(emit_product_formula(lowered, 0.7312));
    const double dev = exp_check(lowered, c, 0.7312, dense_cap());
    std::ostringstream os;
    os << "max deviation " << std::scientific << std::setprecision(2) << dev;
    row("product formula matches exp(-i beta H)", dev <= kEquivTol, os.str());
  }
  for (const auto& p : job.penalties) {
    if (p.kind != "perm") continue;
    const auto f = f_perm(dom);
    bool ok = true;
    for (std::int64_t s = 0; s < dom.state_count() && s < dense_cap(); ++s) {
      const auto tup = dom.state_tuple(s);
      const double v = f.eval_diagonal(tup).real();
      bool is_perm = true;
      std::vector<int> seen(dom.variables()[0].dim, 0);
      for (int x : tup) is_perm = is_perm && !seen[x]++;
      ok = ok && (is_perm ? std::abs(v) < 1e-9 : v >= 1.0 - 1e-9);
    }
    row("permutation penalty vanishes exactly on permutations", ok, "");
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dqirc: compile discrete optimization problems to qubit operators"};
  app.require_subcommand(1);

  std::string job_path, out = "-", code_name = "gray", op = "eq";
  std::string encodings = "sb,gray,unary,bu3gray";
  int d = 4, dmin = 3, dmax = 8;
  double beta = 1.0;
  bool ppm = false, expand = false, no_timestamp = false;

  auto* p_problem = app.add_subcommand("problem", "write the cost operator");
  p_problem->add_option("--job", job_path)->required();
  p_problem->add_option("--out", out);

  auto* p_encode = app.add_subcommand("encode", "print a codeword table");
  p_encode->add_option("--d", d)->required();
  p_encode->add_option("--code", code_name);
  p_encode->add_option("--out", out);

  auto* p_lower = app.add_subcommand("lower", "lower the cost to Pauli form");
  p_lower->add_option("--job", job_path)->required();
  p_lower->add_option("--out", out);

  auto* p_circuit = app.add_subcommand("circuit", "emit the product formula");
  p_circuit->add_option("--job", job_path)->required();
  p_circuit->add_option("--beta", beta);
  p_circuit->add_flag("--expand", expand, "expand macros to 1q + CNOT");
  p_circuit->add_option("--out", out);

  auto* p_report = app.add_subcommand("report", "encoding comparison CSV");
  p_report->add_option("--op", op,
                       "eq|number|number2|fperm|fsum|fss|coloring|tsp|sms");
  p_report->add_option("--encodings", encodings);
  p_report->add_option("--dmin", dmin);
  p_report->add_option("--dmax", dmax);
  p_report->add_flag("--no-timestamp", no_timestamp);
  p_report->add_option("--out", out);

  auto* p_mixer = app.add_subcommand("mixer", "design a strict mixer");
  auto* p_design = p_mixer->add_subcommand("design");
  p_design->add_option("--d", d)->required();
  p_design->add_option("--code", code_name);
  p_design->add_flag("--ppm", ppm, "two-variable permutation mixer");
  p_design->add_option("--out", out);

  auto* p_verify = app.add_subcommand("verify", "run oracle checks on a job");
  p_verify->add_option("--job", job_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (p_problem->parsed()) return run_problem(job_path, out);
    if (p_encode->parsed()) return run_encode(d, code_name, out);
    if (p_lower->parsed()) return run_lower(job_path, out);
    if (p_circuit->parsed()) return run_circuit(job_path, beta, expand, out);
    if (p_report->parsed())
      return run_report(op, encodings, dmin, dmax, !no_timestamp, out);
    if (p_mixer->parsed()) return run_mixer(d, code_name, ppm, out);
    if (p_verify->parsed()) return run_verify(job_path);
  } catch (const LibraryInsufficientError& e) {
    std::cerr << json{{"error", {{"kind", "library_insufficient"},
                                 {"message", e.what()},
                                 {"best_components", e.best_components}}}}
                     .dump()
              << "\n";
    return 3;
  } catch (const DimensionCapError& e) {
    std::cerr << json{{"error", {{"kind", "dimension_cap"},
                                 {"message", e.what()}}}}
                     .dump()
              << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", {{"kind", "contract"},
                                 {"message", e.what()}}}}
                     .dump()
              << "\n";
    return 2;
  }
  return 0;
}
