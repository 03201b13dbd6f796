// Copyright 2026 The conecalc authors
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

#ifndef CONECALC_SYMBOLIC_HPP
#define CONECALC_SYMBOLIC_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conecalc/rational.hpp"

namespace conecalc {

/// Irrational basis symbol: sqrt(d) for squarefree d > 1, whose
/// Q-independence from 1 and from each other is classical, or a user
/// declared symbol carried under an explicit independence axiom (no numeric
/// meaning, so no sign or norm certificates).
class Symbol {
 public:
  static Symbol square_root(const Int& radicand);
  static Symbol declared(std::string name);

  bool is_square_root() const { return is_sqrt_; }
  const Int& radicand() const { return radicand_; }
  const std::string& name() const { return name_; }

  /// Rational enclosure [lo, hi] of the value with width 2^-precision_bits.
  std::pair<Rat, Rat> enclosure(unsigned precision_bits) const;

  bool operator==(const Symbol& other) const;
  bool operator<(const Symbol& other) const;
  std::string to_string() const { return name_; }

 private:
  Symbol() = default;
  bool is_sqrt_ = true;
  Int radicand_ = 0;
  std::string name_;
};

/// A real number of the form q0 + sum q_i * sym_i with rational
/// coefficients. Zero coefficients are dropped, so structural zero testing
/// is exact under the symbol independence guarantee.
class SymbolicNumber {
 public:
  SymbolicNumber() : rational_(0) {}
  SymbolicNumber(const Rat& r) : rational_(r) {}           // NOLINT(google-explicit-constructor)
  SymbolicNumber(const Int& r) : rational_(Rat(r)) {}      // NOLINT(google-explicit-constructor)
  SymbolicNumber(int r) : rational_(Rat(r)) {}             // NOLINT(google-explicit-constructor)
  SymbolicNumber(Rat rational, std::vector<std::pair<Symbol, Rat>> terms);

  static SymbolicNumber sqrt(const Int& radicand) {
    return SymbolicNumber(Rat(0), {{Symbol::square_root(radicand), Rat(1)}});
  }

  const Rat& rational_part() const { return rational_; }
  const std::vector<std::pair<Symbol, Rat>>& terms() const { return terms_; }
  bool is_rational() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty() && rational_ == 0; }
  bool has_declared_symbol() const;

  SymbolicNumber operator+(const SymbolicNumber& other) const;
  SymbolicNumber operator-(const SymbolicNumber& other) const;
  SymbolicNumber operator-() const;
  SymbolicNumber operator*(const Rat& scalar) const;
  bool operator==(const SymbolicNumber& other) const;

  /// Rational enclosure of the value; requires numeric symbols only.
  std::pair<Rat, Rat> enclosure(unsigned precision_bits) const;

  /// Exact sign (-1, 0, +1) by structural zero test plus adaptive-precision
  /// interval refinement; decidable because nonzero values are bounded away
  /// from zero.
  int sign() const;

  Int floor() const;
  Int round() const;  // nearest integer; exact halves round up

  std::string to_string() const;

 private:
  Rat rational_;
  std::vector<std::pair<Symbol, Rat>> terms_;
};

SymbolicNumber operator*(const Rat& scalar, const SymbolicNumber& x);

/// A point of R^n written as a rational base point plus rational direction
/// vectors scaled by pairwise distinct symbols.
class SymbolicPoint {
 public:
  SymbolicPoint(RatVec base, std::vector<std::pair<Symbol, RatVec>> terms);
  explicit SymbolicPoint(RatVec base) : SymbolicPoint(std::move(base), {}) {}

  static SymbolicPoint from_coordinates(const std::vector<SymbolicNumber>& coords);

  Eigen::Index ambient_dim() const { return base_.size(); }
  const RatVec& base() const { return base_; }
  const std::vector<std::pair<Symbol, RatVec>>& terms() const { return terms_; }
  bool is_rational() const { return terms_.empty(); }
  bool has_declared_symbol() const;

  SymbolicNumber coordinate(Eigen::Index i) const;
  std::vector<SymbolicNumber> coordinates() const;

  SymbolicPoint operator+(const RatVec& v) const;
  SymbolicPoint operator-(const RatVec& v) const;
  SymbolicPoint operator*(const Rat& scalar) const;
  SymbolicPoint operator-(const SymbolicPoint& other) const;
  SymbolicPoint apply(const RatMat& lambda) const;
  bool operator==(const SymbolicPoint& other) const;

  /// Certified strict sup-norm bound: true iff every |coordinate| < bound.
  bool sup_norm_less_than(const Rat& bound) const;
  /// Rational enclosure [lo, hi] of the sup norm.
  std::pair<Rat, Rat> sup_norm_enclosure(unsigned precision_bits) const;

  std::string to_string() const;

 private:
  RatVec base_;
  std::vector<std::pair<Symbol, RatVec>> terms_;
};

}  // namespace conecalc

#endif  // CONECALC_SYMBOLIC_HPP
