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

#include "dqir/operator_poly.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

namespace dqir {

namespace {

void check_level(int d, int k, const char* what) {
  if (k < 0 || k >= d)
    throw ContractError(std::string(what) + ": level index " +
                        std::to_string(k) + " out of range for d=" +
                        std::to_string(d));
}

void append_double(std::string& out, double v) {
  // +0.0 and -0.0 must produce the same key so cancelled entries merge.
  if (v == 0.0) v = 0.0;
  char buf[sizeof(double)];
  std::memcpy(buf, &v, sizeof(double));
  out.append(buf, sizeof(double));
}

}  // namespace

LocalFactor LocalFactor::indicator(int d, int k) {
  check_level(d, k, "indicator");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  m(k, k) = 1.0;
  return LocalFactor(m);
}

LocalFactor LocalFactor::value(const std::vector<cxd>& diag) {
  const int d = static_cast<int>(diag.size());
  if (d < 2) throw ContractError("value: need at least two diagonal entries");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = diag[i];
  return LocalFactor(m);
}

LocalFactor LocalFactor::number(int d) {
  std::vector<cxd> diag(d);
  for (int i = 0; i < d; ++i) diag[i] = static_cast<double>(i);
  return value(diag);
}

LocalFactor LocalFactor::one_way_transfer(int d, int k, int l) {
  check_level(d, k, "transfer");
  check_level(d, l, "transfer");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  m(k, l) = 1.0;
  return LocalFactor(m);
}

LocalFactor LocalFactor::symmetric_transfer(int d, int k, int l) {
  check_level(d, k, "transfer");
  check_level(d, l, "transfer");
  if (k == l) throw ContractError("symmetric transfer: k == l");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  m(k, l) = 1.0;
  m(l, k) = 1.0;
  return LocalFactor(m);
}

LocalFactor LocalFactor::identity(int d) {
  return LocalFactor(Eigen::MatrixXcd::Identity(d, d));
}

bool LocalFactor::is_diagonal(double tol) const {
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = 0; j < m_.cols(); ++j)
      if (i != j && std::abs(m_(i, j)) > tol) return false;
  return true;
}

std::optional<cxd> LocalFactor::scalar_identity(double tol) const {
  const cxd c = m_(0, 0);
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = 0; j < m_.cols(); ++j) {
      const cxd want = (i == j) ? c : cxd{0.0, 0.0};
      if (std::abs(m_(i, j) - want) > tol) return std::nullopt;
    }
  return c;
}

bool LocalFactor::is_zero(double tol) const {
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = 0; j < m_.cols(); ++j)
      if (std::abs(m_(i, j)) > tol) return false;
  return true;
}

FactorKind LocalFactor::classify() const {
  const int d = dim();
  if (is_diagonal(0.0)) {
    int ones = 0, nonzeros = 0, one_at = -1;
    for (int i = 0; i < d; ++i) {
      if (m_(i, i) != cxd{0.0, 0.0}) {
        ++nonzeros;
        if (m_(i, i) == cxd{1.0, 0.0}) {
          ++ones;
          one_at = i;
        }
      }
    }
    if (nonzeros == 1 && ones == 1 && one_at >= 0) return FactorKind::Indicator;
    return FactorKind::Value;
  }
  // Off-diagonal patterns.
  int offdiag = 0, kk = -1, ll = -1;
  bool diag_zero = true, unit = true;
  for (int i = 0; i < d; ++i) {
    if (m_(i, i) != cxd{0.0, 0.0}) diag_zero = false;
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      if (m_(i, j) != cxd{0.0, 0.0}) {
        ++offdiag;
        if (m_(i, j) != cxd{1.0, 0.0}) unit = false;
        if (kk < 0) {
          kk = i;
          ll = j;
        }
      }
    }
  }
  if (diag_zero && unit && offdiag == 1) return FactorKind::OneWayTransfer;
  if (diag_zero && unit && offdiag == 2 && m_(kk, ll) == cxd{1.0, 0.0} &&
      m_(ll, kk) == cxd{1.0, 0.0})
    return FactorKind::SymmetricTransfer;
  return FactorKind::GeneralLocal;
}

std::string LocalFactor::key() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(m_.size()) * 16 + 4);
  out.push_back(static_cast<char>(dim()));
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = 0; j < m_.cols(); ++j) {
      append_double(out, m_(i, j).real());
      append_double(out, m_(i, j).imag());
    }
  return out;
}

std::string ProductTerm::factor_key() const {
  std::string out;
  for (const auto& [var, f] : factors) {
    out += var;
    out.push_back('\0');
    out += f.key();
  }
  return out;
}

void OperatorPoly::add_term(ProductTerm t) {
  for (const auto& [var, f] : t.factors) {
    if (f.dim() != domain_.dim_of(var))
      throw ContractError("OperatorPoly: factor dimension mismatch on '" +
                          var + "'");
  }
  terms_.push_back(std::move(t));
}

namespace {

// Fold scalar-identity factors into the coefficient; returns false when the
// term vanished (a zero factor or a pruned coefficient).
bool canonicalize_term(ProductTerm& t) {
  for (auto it = t.factors.begin(); it != t.factors.end();) {
    if (auto c = it->second.scalar_identity()) {
      t.coeff *= *c;
      it = t.factors.erase(it);
    } else if (it->second.is_zero()) {
      return false;
    } else {
      ++it;
    }
  }
  return std::abs(t.coeff) > kPruneTol;
}

// Merge terms with byte-identical factor maps.
std::vector<ProductTerm> merge_equal(const std::vector<ProductTerm>& in) {
  std::map<std::string, ProductTerm> by_key;
  for (const auto& t : in) {
    auto key = t.factor_key();
    auto it = by_key.find(key);
    if (it == by_key.end())
      by_key.emplace(std::move(key), t);
    else
      it->second.coeff += t.coeff;
  }
  std::vector<ProductTerm> out;
  out.reserve(by_key.size());
  for (auto& [k, t] : by_key)
    if (std::abs(t.coeff) > kPruneTol) out.push_back(std::move(t));
  return out;
}

}  // namespace

// Terms merge only when their factor maps are byte-identical; per-term
// factors are canonicalized but sums over a variable's levels are kept
// expanded, so that any cancellation across levels happens (or not) in the
// encoded Pauli representation where it is encoding-dependent.
OperatorPoly OperatorPoly::simplified() const {
  std::vector<ProductTerm> work;
  work.reserve(terms_.size());
  for (auto t : terms_)
    if (canonicalize_term(t)) work.push_back(std::move(t));
  work = merge_equal(work);
  std::sort(work.begin(), work.end(),
            [](const ProductTerm& a, const ProductTerm& b) {
              return a.factor_key() < b.factor_key();
            });
  return OperatorPoly(domain_, std::move(work));
}

OperatorPoly OperatorPoly::adjointed() const {
  OperatorPoly out(domain_);
  for (const auto& t : terms_) {
    ProductTerm a;
    a.coeff = std::conj(t.coeff);
    for (const auto& [var, f] : t.factors) a.factors.emplace(var, f.adjointed());
    out.terms_.push_back(std::move(a));
  }
  return out;
}

bool OperatorPoly::is_diagonal() const {
  for (const auto& t : terms_)
    for (const auto& [var, f] : t.factors)
      if (!f.is_diagonal()) return false;
  return true;
}

cxd OperatorPoly::eval_diagonal(const std::vector<int>& assignment) const {
  cxd total{0.0, 0.0};
  for (const auto& t : terms_) {
    cxd v = t.coeff;
    for (const auto& [var, f] : t.factors) {
      const int x = assignment[domain_.index_of(var)];
      v *= f.matrix()(x, x);
    }
    total += v;
  }
  return total;
}

bool OperatorPoly::is_hermitian() const {
  return simplified().struct_equal(adjointed().simplified());
}

std::vector<std::string> OperatorPoly::support() const {
  std::vector<std::string> vars;
  for (const auto& v : domain_.variables()) {
    for (const auto& t : terms_) {
      if (t.factors.count(v.id)) {
        vars.push_back(v.id);
        break;
      }
    }
  }
  return vars;
}

bool OperatorPoly::struct_equal(const OperatorPoly& other) const {
  if (!(domain_ == other.domain_)) return false;
  const auto a = simplified().terms_;
  const auto b = other.simplified().terms_;
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].coeff != b[i].coeff) return false;
    if (a[i].factor_key() != b[i].factor_key()) return false;
  }
  return true;
}

std::string OperatorPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.coeff.real();
    if (t.coeff.imag() != 0.0) os << (t.coeff.imag() < 0 ? "" : "+")
                                  << t.coeff.imag() << "i";
    os << ")";
    for (const auto& [var, f] : t.factors) {
      switch (f.classify()) {
        case FactorKind::Indicator: {
          int k = 0;
          for (int i = 0; i < f.dim(); ++i)
            if (f.matrix()(i, i) != cxd{0.0, 0.0}) k = i;
          os << " P" << k << "[" << var << "]";
          break;
        }
        case FactorKind::Value:
          os << " A[" << var << "]";
          break;
        case FactorKind::OneWayTransfer:
        case FactorKind::SymmetricTransfer:
          os << " T[" << var << "]";
          break;
        case FactorKind::GeneralLocal:
          os << " G[" << var << "]";
          break;
      }
    }
  }
  return os.str();
}

OperatorPoly build_primitive(const DomainSpec& domain, const std::string& var,
                             const LocalFactor& factor) {
  if (factor.dim() != domain.dim_of(var))
    throw ContractError("build_primitive: factor dimension " +
                        std::to_string(factor.dim()) + " != d of '" + var +
                        "'");
  OperatorPoly o(domain);
  ProductTerm t;
  t.factors.emplace(var, factor);
  o.terms().push_back(std::move(t));
  return o;
}

OperatorPoly indicator(const DomainSpec& domain, const std::string& var,
                       int k) {
  return build_primitive(domain, var, LocalFactor::indicator(domain.dim_of(var), k));
}

OperatorPoly value_op(const DomainSpec& domain, const std::string& var,
                      const std::vector<cxd>& diag) {
  if (static_cast<int>(diag.size()) != domain.dim_of(var))
    throw ContractError("value_op: coefficient list length != d of '" + var +
                        "'");
  return build_primitive(domain, var, LocalFactor::value(diag));
}

OperatorPoly number_op(const DomainSpec& domain, const std::string& var) {
  return build_primitive(domain, var, LocalFactor::number(domain.dim_of(var)));
}

OperatorPoly transfer(const DomainSpec& domain, const std::string& var, int k,
                      int l, bool symmetric) {
  const int d = domain.dim_of(var);
  return build_primitive(domain, var,
                         symmetric ? LocalFactor::symmetric_transfer(d, k, l)
                                   : LocalFactor::one_way_transfer(d, k, l));
}

OperatorPoly general_local(const DomainSpec& domain, const std::string& var,
                           const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols())
    throw ContractError("general_local: matrix not square");
  return build_primitive(domain, var, LocalFactor(m));
}

namespace {
void check_same_domain(const OperatorPoly& a, const OperatorPoly& b,
                       const char* what) {
  if (!(a.domain() == b.domain()))
    throw ContractError(std::string(what) + ": operands have different domains");
}
}  // namespace

OperatorPoly operator+(const OperatorPoly& a, const OperatorPoly& b) {
  check_same_domain(a, b, "add");
  std::vector<ProductTerm> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return OperatorPoly(a.domain(), std::move(terms)).simplified();
}

OperatorPoly operator-(const OperatorPoly& a, const OperatorPoly& b) {
  return a + (-b);
}

OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b) {
  check_same_domain(a, b, "mul");
  OperatorPoly out(a.domain());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      ProductTerm t;
      t.coeff = ta.coeff * tb.coeff;
      t.factors = ta.factors;
      for (const auto& [var, fb] : tb.factors) {
        auto it = t.factors.find(var);
        if (it == t.factors.end())
          t.factors.emplace(var, fb);
        else
          it->second = LocalFactor(it->second.matrix() * fb.matrix());
      }
      out.terms().push_back(std::move(t));
    }
  }
  return out.simplified();
}

OperatorPoly operator*(cxd s, const OperatorPoly& a) {
  OperatorPoly out = a;
  for (auto& t : out.terms()) t.coeff *= s;
  return out.simplified();
}

}  // namespace dqir
