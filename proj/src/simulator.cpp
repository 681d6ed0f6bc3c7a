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

#include "dqir/simulator.hpp"

#include <cmath>

namespace dqir {

namespace {

void check_cap(std::int64_t dim, std::int64_t cap, const char* what) {
  if (dim > cap)
    throw DimensionCapError(std::string(what) + ": dimension " +
                            std::to_string(dim) + " exceeds cap " +
                            std::to_string(cap));
}

// Pauli action on a basis index: returns (new_index, phase).
std::pair<std::uint64_t, cxd> pauli_on_basis(const PauliTerm& t,
                                             std::uint64_t basis) {
  std::uint64_t out = basis;
  cxd phase = t.coeff;
  for (const auto& [q, op] : t.ops) {
    const bool bit = (basis >> q) & 1ull;
    switch (op) {
      case 'X':
        out ^= 1ull << q;
        break;
      case 'Y':
        out ^= 1ull << q;
        phase *= bit ? cxd{0.0, -1.0} : cxd{0.0, 1.0};
        break;
      case 'Z':
        if (bit) phase = -phase;
        break;
    }
  }
  return {out, phase};
}

}  // namespace

DenseMatrix to_dense(const OperatorPoly& op, std::int64_t dim_cap) {
  const std::int64_t dim = op.domain().state_count();
  check_cap(dim, dim_cap, "to_dense(OperatorPoly)");
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  const auto& vars = op.domain().variables();
  for (const auto& t : op.terms()) {
    // kron over variables, variable 0 least significant.
    DenseMatrix acc = DenseMatrix::Constant(1, 1, t.coeff);
    for (const auto& v : vars) {
      auto it = t.factors.find(v.id);
      const DenseMatrix f = (it != t.factors.end())
                                ? it->second.matrix()
                                : DenseMatrix::Identity(v.dim, v.dim);
      // acc := f (x) acc so earlier variables stay least significant.
      DenseMatrix next(f.rows() * acc.rows(), f.cols() * acc.cols());
      for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j)
          next.block(i * acc.rows(), j * acc.cols(), acc.rows(), acc.cols()) =
              f(i, j) * acc;
      acc = std::move(next);
    }
    m += acc;
  }
  return m;
}

DenseMatrix to_dense(const PauliPoly& p, std::int64_t dim_cap) {
  const std::int64_t dim = std::int64_t{1} << p.n_qubits();
  check_cap(dim, dim_cap, "to_dense(PauliPoly)");
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  for (const auto& t : p.terms())
    for (std::int64_t col = 0; col < dim; ++col) {
      const auto [row, phase] = pauli_on_basis(t, col);
      m(row, col) += phase;
    }
  return m;
}

void apply_gate(const Gate& g, DenseVector& psi) {
  const std::int64_t dim = psi.size();
  auto rot1q = [&](int q, const cxd& u00, const cxd& u01, const cxd& u10,
                   const cxd& u11) {
    const std::int64_t bit = std::int64_t{1} << q;
    for (std::int64_t s = 0; s < dim; ++s) {
      if (s & bit) continue;
      const cxd a = psi[s], b = psi[s | bit];
      psi[s] = u00 * a + u01 * b;
      psi[s | bit] = u10 * a + u11 * b;
    }
  };
  auto controls_match = [&](std::int64_t s,
                            const std::vector<std::pair<int, bool>>& cs) {
    for (const auto& [q, on] : cs)
      if (static_cast<bool>((s >> q) & 1ll) != on) return false;
    return true;
  };

  const double h = g.param / 2.0;
  switch (g.kind) {
    case GateKind::RX:
      rot1q(g.q0, std::cos(h), cxd{0, -std::sin(h)}, cxd{0, -std::sin(h)},
            std::cos(h));
      return;
    case GateKind::RY:
      rot1q(g.q0, std::cos(h), -std::sin(h), std::sin(h), std::cos(h));
      return;
    case GateKind::RZ:
      rot1q(g.q0, std::exp(cxd{0, -h}), 0.0, 0.0, std::exp(cxd{0, h}));
      return;
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      rot1q(g.q0, r, r, r, -r);
      return;
    }
    case GateKind::X:
      rot1q(g.q0, 0.0, 1.0, 1.0, 0.0);
      return;
    case GateKind::GPhase:
      psi *= std::exp(cxd{0, -g.param});
      return;
    case GateKind::CNOT: {
      const std::int64_t cbit = std::int64_t{1} << g.q0;
      const std::int64_t tbit = std::int64_t{1} << g.q1;
      for (std::int64_t s = 0; s < dim; ++s)
        if ((s & cbit) && !(s & tbit)) std::swap(psi[s], psi[s | tbit]);
      return;
    }
    case GateKind::PauliExp: {
      // exp(-i phi P) = cos(phi) I - i sin(phi) P, since P^2 = I.
      PauliTerm t;
      t.coeff = 1.0;
      t.ops = g.pauli;
      DenseVector p_psi = DenseVector::Zero(dim);
      for (std::int64_t s = 0; s < dim; ++s) {
        if (psi[s] == cxd{0.0, 0.0}) continue;
        const auto [row, phase] = pauli_on_basis(t, s);
        p_psi[row] += phase * psi[s];
      }
      psi = std::cos(g.param) * psi - cxd{0, 1} * std::sin(g.param) * p_psi;
      return;
    }
    case GateKind::MCRY: {
      const std::int64_t bit = std::int64_t{1} << g.q0;
      const double c = std::cos(h), s = std::sin(h);
      for (std::int64_t st = 0; st < dim; ++st) {
        if (st & bit) continue;
        if (!controls_match(st, g.controls)) continue;
        const cxd a = psi[st], b = psi[st | bit];
        psi[st] = c * a - s * b;
        psi[st | bit] = s * a + c * b;
      }
      return;
    }
    case GateKind::APhi:
    case GateKind::CAPhi: {
      const std::int64_t abit = std::int64_t{1} << g.q0;
      const std::int64_t bbit = std::int64_t{1} << g.q1;
      const double c = std::cos(g.param), s = std::sin(g.param);
      for (std::int64_t st = 0; st < dim; ++st) {
        if (!(st & abit) || (st & bbit)) continue;  // visit |a=1,b=0> side
        if (g.kind == GateKind::CAPhi && !controls_match(st, g.controls))
          continue;
        const std::int64_t partner = (st ^ abit) | bbit;  // |a=0,b=1>
        const cxd va = psi[st], vb = psi[partner];
        psi[st] = c * va + cxd{0, -s} * vb;
        psi[partner] = cxd{0, -s} * va + c * vb;
      }
      return;
    }
  }
  throw ContractError("apply_gate: unknown gate kind");
}

void apply_circuit(const Circuit& c, DenseVector& psi) {
  for (const auto& g : c.gates) apply_gate(g, psi);
}

DenseMatrix to_dense(const Circuit& c, std::int64_t dim_cap) {
  const std::int64_t dim = std::int64_t{1} << c.n_qubits;
  check_cap(dim, dim_cap, "to_dense(Circuit)");
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  for (std::int64_t col = 0; col < dim; ++col) {
    DenseVector psi = DenseVector::Zero(dim);
    psi[col] = 1.0;
    apply_circuit(c, psi);
    m.col(col) = psi;
  }
  return m;
}

std::map<std::uint64_t, cxd> apply_to_basis(const PauliPoly& p,
                                            std::uint64_t basis) {
  std::map<std::uint64_t, cxd> out;
  for (const auto& t : p.terms()) {
    const auto [row, phase] = pauli_on_basis(t, basis);
    out[row] += phase;
  }
  return out;
}

double restricted_equiv(const OperatorPoly& op, const PauliPoly& p,
                        const EncodingAssignment& assignment,
                        std::int64_t dim_cap) {
  const auto& dom = op.domain();
  const std::int64_t n = dom.state_count();
  check_cap(n, dim_cap, "restricted_equiv");
  check_cap(std::int64_t{1} << assignment.total_qubits(), dim_cap,
            "restricted_equiv");

  double max_dev = 0.0;
  for (std::int64_t y = 0; y < n; ++y) {
    const auto ty = dom.state_tuple(y);
    const std::uint64_t ey = assignment.encode_state(ty);

    // DQIR column: apply each term to the tuple.
    std::map<std::int64_t, cxd> col;
    for (const auto& term : op.terms()) {
      std::vector<std::pair<std::vector<int>, cxd>> fan{{ty, term.coeff}};
      for (const auto& [var, f] : term.factors) {
        const std::size_t vi = dom.index_of(var);
        std::vector<std::pair<std::vector<int>, cxd>> next;
        for (const auto& [tup, amp] : fan) {
          const int xin = tup[vi];
          for (int xout = 0; xout < f.dim(); ++xout) {
            const cxd e = f.matrix()(xout, xin);
            if (e == cxd{0.0, 0.0}) continue;
            auto t2 = tup;
            t2[vi] = xout;
            next.emplace_back(std::move(t2), amp * e);
          }
        }
        fan = std::move(next);
      }
      for (const auto& [tup, amp] : fan) col[dom.state_index(tup)] += amp;
    }

    const auto pcol = apply_to_basis(p, ey);

    for (std::int64_t x = 0; x < n; ++x) {
      const auto tx = dom.state_tuple(x);
      const std::uint64_t ex = assignment.encode_state(tx);
      cxd lhs{0.0, 0.0};
      if (auto it = pcol.find(ex); it != pcol.end()) lhs = it->second;
      cxd rhs{0.0, 0.0};
      if (auto it = col.find(x); it != col.end()) rhs = it->second;
      max_dev = std::max(max_dev, std::abs(lhs - rhs));
    }
  }
  return max_dev;
}

DenseMatrix hermitian_exp(const DenseMatrix& h, double beta) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(h);
  const auto& vals = es.eigenvalues();
  const auto& vecs = es.eigenvectors();
  DenseVector phases(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    phases[i] = std::exp(cxd{0, -beta * vals[i]});
  return vecs * phases.asDiagonal() * vecs.adjoint();
}

namespace {

bool basis_preserving(const Circuit& c) {
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::RZ:
      case GateKind::X:
      case GateKind::CNOT:
      case GateKind::GPhase:
        continue;
      case GateKind::PauliExp: {
        bool all_z = true;
        for (const auto& [q, op] : g.pauli) all_z = all_z && op == 'Z';
        if (!all_z) return false;
        continue;
      }
      default:
        return false;
    }
  }
  return true;
}

// Phase applied by a basis-preserving circuit to |basis>; the image index is
// returned through `image`.
cxd basis_phase(const Circuit& c, std::uint64_t basis, std::uint64_t& image) {
  std::uint64_t s = basis;
  cxd phase{1.0, 0.0};
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::RZ: {
        const bool bit = (s >> g.q0) & 1ull;
        phase *= std::exp(cxd{0, bit ? g.param / 2.0 : -g.param / 2.0});
        break;
      }
      case GateKind::X:
        s ^= 1ull << g.q0;
        break;
      case GateKind::CNOT:
        if ((s >> g.q0) & 1ull) s ^= 1ull << g.q1;
        break;
      case GateKind::GPhase:
        phase *= std::exp(cxd{0, -g.param});
        break;
      case GateKind::PauliExp: {
        double sign = 1.0;
        for (const auto& [q, op] : g.pauli)
          if ((s >> q) & 1ull) sign = -sign;
        phase *= std::exp(cxd{0, -g.param * sign});
        break;
      }
      default:
        throw ContractError("basis_phase: gate not basis-preserving");
    }
  }
  image = s;
  return phase;
}

}  // namespace

double exp_check(const PauliPoly& h, const Circuit& c, double beta,
                 std::int64_t dim_cap) {
  if (h.n_qubits() != c.n_qubits)
    throw ContractError("exp_check: dimension mismatch");
  const std::int64_t dim = std::int64_t{1} << h.n_qubits();
  check_cap(dim, dim_cap, "exp_check");

  if (h.is_diagonal() && basis_preserving(c)) {
    // Column-by-column without dense matrices: both sides are diagonal up to
    // basis permutation; any permutation shows up as deviation 1.
    double max_dev = 0.0;
    for (std::int64_t s = 0; s < dim; ++s) {
      std::uint64_t image = 0;
      const cxd got = basis_phase(c, static_cast<std::uint64_t>(s), image);
      const cxd want =
          std::exp(cxd{0, -beta * h.eval_diagonal(s).real()});
      if (image != static_cast<std::uint64_t>(s)) return 1.0;
      max_dev = std::max(max_dev, std::abs(got - want));
    }
    return max_dev;
  }

  const DenseMatrix uc = to_dense(c, dim_cap);
  const DenseMatrix uh = hermitian_exp(to_dense(h, dim_cap), beta);
  return (uc - uh).cwiseAbs().maxCoeff();
}

double leakage(const Circuit& u, const std::vector<std::uint64_t>& feasible,
               const DenseVector& psi0) {
  double in_subspace = 0.0;
  for (std::uint64_t s : feasible) in_subspace += std::norm(psi0[s]);
  if (std::abs(in_subspace - psi0.squaredNorm()) > kBooleanTol)
    throw ContractError("leakage: initial state is not feasible");

  DenseVector psi = psi0;
  apply_circuit(u, psi);
  double p = 0.0;
  for (std::uint64_t s : feasible) p += std::norm(psi[s]);
  return 1.0 - p;
}

bool is_hermitian_dense(const DenseMatrix& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary_dense(const DenseMatrix& m, double tol) {
  const DenseMatrix p = m.adjoint() * m;
  return (p - DenseMatrix::Identity(m.rows(), m.cols()))
             .cwiseAbs()
             .maxCoeff() <= tol;
}

}  // namespace dqir
