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

#include <doctest.h>

#include <algorithm>
#include <functional>

#include "dqir/problems.hpp"
#include "dqir/simulator.hpp"
#include "oracles.hpp"

using namespace dqir;

namespace {

void check_cost_against(const OperatorPoly& h,
                        const std::function<double(const std::vector<int>&)>& f,
                        double tol = 1e-9) {
  REQUIRE(h.is_diagonal());
  REQUIRE(h.is_hermitian());
  const auto& dom = h.domain();
  REQUIRE(dom.state_count() <= 4096);
  for (std::int64_t s = 0; s < dom.state_count(); ++s) {
    const auto tup = dom.state_tuple(s);
    const cxd v = h.eval_diagonal(tup);
    CHECK(std::abs(v.imag()) < tol);
    CHECK(std::abs(v.real() - f(tup)) < tol);
  }
}

}  // namespace

TEST_CASE("coloring: triangle with three colors has a zero-cost coloring") {
  ColoringInstance inst{3, 3, {{0, 1}, {1, 2}, {0, 2}}};
  const auto h = coloring_cost(inst);
  CHECK(h.eval_diagonal({0, 1, 2}) == cxd{0.0, 0.0});
  check_cost_against(h, [&](const auto& x) {
    return oracle::coloring_value(inst, x);
  });
}

TEST_CASE("coloring: odd cycle is not 2-colorable") {
  ColoringInstance inst{3, 2, {{0, 1}, {1, 2}, {0, 2}}};
  const auto h = coloring_cost(inst);
  double min_val = 1e9;
  for (std::int64_t s = 0; s < 8; ++s)
    min_val = std::min(min_val,
                       h.eval_diagonal(h.domain().state_tuple(s)).real());
  CHECK(min_val == doctest::Approx(1.0));
}

TEST_CASE("coloring: single edge, equal colors cost 1; bad edges rejected") {
  ColoringInstance inst{2, 2, {{0, 1}}};
  CHECK(coloring_cost(inst).eval_diagonal({0, 0}) == cxd{1.0, 0.0});
  ColoringInstance bad{2, 2, {{0, 5}}};
  CHECK_THROWS_AS(coloring_cost(bad), ContractError);
}

TEST_CASE("tsp: unit-distance triangle tour costs 3 on any permutation") {
  TspInstance inst{3, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}};
  const auto h = tsp_cost(inst);
  CHECK(h.eval_diagonal({0, 1, 2}).real() == doctest::Approx(3.0));
  CHECK(h.eval_diagonal({2, 0, 1}).real() == doctest::Approx(3.0));
}

TEST_CASE("tsp: M=4 integer distances match the tour-length oracle") {
  TspInstance inst{4,
                   {{0, 3, 7, 2},
                    {3, 0, 5, 9},
                    {7, 5, 0, 4},
                    {2, 9, 4, 0}}};
  const auto h = tsp_cost(inst);
  std::vector<int> perm{0, 1, 2, 3};
  do {
    CHECK(h.eval_diagonal(perm).real() ==
          doctest::Approx(oracle::tour_length(inst, perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("tsp: infeasible states still evaluate to a number") {
  TspInstance inst{3, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}};
  const auto h = tsp_cost(inst);
  const cxd v = h.eval_diagonal({0, 0, 1});
  CHECK(std::abs(v.imag()) < 1e-12);  // feasibility is handled elsewhere
}

TEST_CASE("tsp: asymmetric distances are rejected") {
  TspInstance inst{2, {{0, 1}, {2, 0}}};
  CHECK_THROWS_AS(tsp_cost(inst), ContractError);
}

TEST_CASE("sms: two-job instances match the schedule oracle") {
  SmsInstance inst{{1, 1}, {1, 2}, {1, 1}};
  const auto h = sms_cost(inst);
  CHECK(h.eval_diagonal({0, 1}).real() == doctest::Approx(0.0));
  CHECK(h.eval_diagonal({1, 0}).real() == doctest::Approx(0.0));
  CHECK(oracle::weighted_lateness(inst, {0, 1}, true) == doctest::Approx(0.0));
}

TEST_CASE("sms: single weighted job") {
  SmsInstance inst{{3}, {1}, {2}};
  const auto h = sms_cost(inst);
  CHECK(h.eval_diagonal({0}).real() == doctest::Approx(4.0));
}

TEST_CASE("sms: weighted and unweighted variants both match their oracles") {
  SmsInstance inst{{2, 1, 3}, {3, 2, 4}, {1, 2, 0.5}};
  for (bool weighted : {true, false}) {
    const auto h = sms_cost(inst, weighted);
    std::vector<int> perm{0, 1, 2};
    do {
      CHECK(h.eval_diagonal(perm).real() ==
            doctest::Approx(oracle::weighted_lateness(inst, perm, weighted)));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("portfolio: single-lot return term") {
  PortfolioInstance inst{0.0, {{1}}, {1}, {+1}, 0.0, 0};
  const auto [cost, constraint] = portfolio_cost(inst);
  CHECK(cost.eval_diagonal({2}).real() == doctest::Approx(-1.0));
  check_cost_against(cost, [&](const auto& x) {
    return oracle::portfolio_value(inst, x);
  });
}

TEST_CASE("portfolio: trading cost is a delta on the previous position") {
  PortfolioInstance inst{0.0, {{0}}, {0}, {0}, 0.5, 0};
  const auto [cost, constraint] = portfolio_cost(inst);
  CHECK(cost.eval_diagonal({1}).real() == doctest::Approx(0.0));
  CHECK(cost.eval_diagonal({0}).real() == doctest::Approx(0.5));
}

TEST_CASE("portfolio: quadratic risk with unit covariance") {
  PortfolioInstance inst{1.0, {{1, 1}, {1, 1}}, {0, 0}, {0, 0}, 0.0, 0};
  const auto [cost, constraint] = portfolio_cost(inst);
  CHECK(cost.eval_diagonal({2, 2}).real() == doctest::Approx(4.0));
  check_cost_against(cost, [&](const auto& x) {
    return oracle::portfolio_value(inst, x);
  });
  CHECK(constraint.eval_diagonal({2, 0}).real() == doctest::Approx(0.0));
  CHECK(constraint.eval_diagonal({2, 2}).real() == doctest::Approx(2.0));
}

TEST_CASE("portfolio: bad previous position is rejected") {
  PortfolioInstance inst{0.5, {{1}}, {1}, {2}, 0.1, 0};
  CHECK_THROWS_AS(portfolio_cost(inst), ContractError);
}

TEST_CASE("ilp: dot-product eigenvalues and spectrum") {
  IlpInstance inst{{}, {}, {1, 1}, {3, 3}};
  const auto h = ilp_cost(inst);
  CHECK(h.eval_diagonal({2, 2}).real() == doctest::Approx(4.0));
  check_cost_against(h, [&](const auto& x) { return oracle::ilp_value(inst, x); });

  IlpInstance inst2{{}, {}, {2, -1}, {3, 3}};
  CHECK(ilp_cost(inst2).eval_diagonal({1, 2}).real() == doctest::Approx(0.0));

  IlpInstance inst3{{}, {}, {3}, {4}};
  const auto m = to_dense(ilp_cost(inst3));
  std::vector<double> spectrum;
  for (int i = 0; i < 4; ++i) spectrum.push_back(m(i, i).real());
  std::sort(spectrum.begin(), spectrum.end());
  CHECK(spectrum == std::vector<double>{0.0, 3.0, 6.0, 9.0});
}

TEST_CASE("tsp cost is invariant under cyclic relabeling of positions") {
  TspInstance inst{3, {{0, 2, 5}, {2, 0, 3}, {5, 3, 0}}};
  const auto h = tsp_cost(inst);
  const auto& dom = h.domain();
  std::vector<double> base, shifted;
  for (std::int64_t s = 0; s < dom.state_count(); ++s) {
    const auto tup = dom.state_tuple(s);
    base.push_back(h.eval_diagonal(tup).real());
    std::vector<int> rot(tup.size());
    for (std::size_t i = 0; i < tup.size(); ++i)
      rot[i] = tup[(i + 1) % tup.size()];
    shifted.push_back(h.eval_diagonal(rot).real());
  }
  std::sort(base.begin(), base.end());
  std::sort(shifted.begin(), shifted.end());
  for (std::size_t i = 0; i < base.size(); ++i)
    CHECK(base[i] == doctest::Approx(shifted[i]));
}

TEST_CASE("permutation projector has rank M! and projects") {
  DomainSpec dom = DomainSpec::uniform(3, 3);
  const auto fp = permutation_projector(dom);
  CHECK(fp.feasible_states.size() == 6);
  const auto m = to_dense(fp.op);
  CHECK((m * m - m).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(m.trace().real() - 6.0) < 1e-12);
  for (std::int64_t s = 0; s < 27; ++s) {
    const bool feas = std::binary_search(fp.feasible_states.begin(),
                                         fp.feasible_states.end(), s);
    CHECK(m(s, s).real() == doctest::Approx(feas ? 1.0 : 0.0));
    CHECK(oracle::is_permutation(dom.state_tuple(s), 3) == feas);
  }
}

TEST_CASE("permutation projector requires d == M") {
  CHECK_THROWS_AS(permutation_projector(DomainSpec::uniform(3, 4)),
                  ContractError);
}

TEST_CASE("all-valid projector is the identity") {
  DomainSpec dom = DomainSpec::uniform(2, 3);
  const auto fp = all_valid_projector(dom);
  CHECK(fp.op.struct_equal(OperatorPoly::identity(dom)));
  CHECK(fp.feasible_states.size() == 9);
}

TEST_CASE("sum projector selects the target-sum states") {
  DomainSpec dom = DomainSpec::uniform(1, 3, "z");
  const auto fp = sum_projector(dom, {-1.0, 0.0, 1.0}, 0.0);
  REQUIRE(fp.feasible_states.size() == 1);
  CHECK(fp.feasible_states[0] == 1);
  const auto m = to_dense(fp.op);
  CHECK(m(1, 1) == cxd{1.0, 0.0});
  CHECK(std::abs(m.trace().real() - 1.0) < 1e-12);
}
