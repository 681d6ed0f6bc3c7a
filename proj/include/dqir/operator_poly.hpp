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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dqir/common.hpp"
#include "dqir/domain.hpp"

namespace dqir {

/// The recognizable shapes of a single-variable operator, used for
/// pretty-printing and serialization. Internally every factor is a dense
/// d x d matrix; the kind is recovered by pattern matching.
enum class FactorKind { Indicator, Value, OneWayTransfer, SymmetricTransfer, GeneralLocal };

/// A single-variable operator, stored canonically as a d x d matrix so that
/// term merging needs one rule only.
class LocalFactor {
 public:
  LocalFactor() = default;
  explicit LocalFactor(Eigen::MatrixXcd m) : m_(std::move(m)) {}

  static LocalFactor indicator(int d, int k);
  static LocalFactor value(const std::vector<cxd>& diag);
  static LocalFactor number(int d);
  static LocalFactor one_way_transfer(int d, int k, int l);   // |k><l|
  static LocalFactor symmetric_transfer(int d, int k, int l); // |k><l| + |l><k|
  static LocalFactor identity(int d);

  const Eigen::MatrixXcd& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

  bool is_diagonal(double tol = kPruneTol) const;
  /// Returns c if the factor equals c * identity within tol, else nullopt.
  std::optional<cxd> scalar_identity(double tol = kPruneTol) const;
  bool is_zero(double tol = kPruneTol) const;

  LocalFactor adjointed() const { return LocalFactor(m_.adjoint()); }

  /// Best-effort classification for printing/serialization.
  FactorKind classify() const;

  /// Byte-stable key for structural comparison and term merging.
  std::string key() const;

  bool operator==(const LocalFactor& other) const {
    return key() == other.key();
  }

 private:
  Eigen::MatrixXcd m_;
};

/// coeff * tensor product of per-variable factors; variables absent from the
/// map carry implicit identity.
struct ProductTerm {
  cxd coeff{1.0, 0.0};
  std::map<std::string, LocalFactor> factors;

  std::string factor_key() const;
};

/// An encoding-independent operator: a weighted sum of products of
/// single-variable primitives over a fixed domain.
class OperatorPoly {
 public:
  OperatorPoly() = default;
  explicit OperatorPoly(DomainSpec domain) : domain_(std::move(domain)) {}
  OperatorPoly(DomainSpec domain, std::vector<ProductTerm> terms)
      : domain_(std::move(domain)), terms_(std::move(terms)) {}

  static OperatorPoly zero(const DomainSpec& domain) {
    return OperatorPoly(domain);
  }
  static OperatorPoly identity(const DomainSpec& domain) {
    OperatorPoly o(domain);
    o.terms_.push_back(ProductTerm{});
    return o;
  }
  static OperatorPoly constant(const DomainSpec& domain, cxd c) {
    OperatorPoly o(domain);
    o.terms_.push_back(ProductTerm{c, {}});
    return o;
  }

  const DomainSpec& domain() const { return domain_; }
  const std::vector<ProductTerm>& terms() const { return terms_; }
  std::vector<ProductTerm>& terms() { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(ProductTerm t);

  /// Cancel, collect and combine terms; canonicalize factors; drop
  /// coefficients below the prune tolerance. Idempotent, and the dense
  /// matrix is unchanged within 1e-12.
  OperatorPoly simplified() const;

  OperatorPoly adjointed() const;

  /// True when every factor in every term is diagonal.
  bool is_diagonal() const;

  /// Eigenvalue on the basis state |assignment> (diagonal operators only).
  cxd eval_diagonal(const std::vector<int>& assignment) const;

  /// Structural Hermiticity: O equals adjoint(O) after simplification.
  bool is_hermitian() const;

  /// Variables on which some term acts nontrivially.
  std::vector<std::string> support() const;

  /// Structural equality of simplified forms (bit-exact coefficients).
  bool struct_equal(const OperatorPoly& other) const;

  std::string to_string() const;

 private:
  DomainSpec domain_;
  std::vector<ProductTerm> terms_;
};

// --- primitive builders ---

/// Single-term operator with coefficient 1 holding one primitive factor.
OperatorPoly build_primitive(const DomainSpec& domain, const std::string& var,
                             const LocalFactor& factor);

OperatorPoly indicator(const DomainSpec& domain, const std::string& var, int k);
OperatorPoly value_op(const DomainSpec& domain, const std::string& var,
                      const std::vector<cxd>& diag);
OperatorPoly number_op(const DomainSpec& domain, const std::string& var);
OperatorPoly transfer(const DomainSpec& domain, const std::string& var, int k,
                      int l, bool symmetric = true);
OperatorPoly general_local(const DomainSpec& domain, const std::string& var,
                           const Eigen::MatrixXcd& m);

// --- algebra ---

OperatorPoly operator+(const OperatorPoly& a, const OperatorPoly& b);
OperatorPoly operator-(const OperatorPoly& a, const OperatorPoly& b);
OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b);
OperatorPoly operator*(cxd s, const OperatorPoly& a);
inline OperatorPoly operator*(const OperatorPoly& a, cxd s) { return s * a; }
inline OperatorPoly operator-(const OperatorPoly& a) {
  return cxd{-1.0, 0.0} * a;
}

}  // namespace dqir
