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

#include "conecalc/symbolic.hpp"

#include <algorithm>
#include <map>

namespace conecalc {

namespace {

bool is_squarefree(const Int& d) {
  Int rest = d;
  for (Int p = 2; p * p <= rest; ++p) {
    if (rest % p == 0) {
      rest /= p;
      if (rest % p == 0) return false;
    }
  }
  return true;
}

constexpr unsigned kMaxPrecisionBits = 1u << 20;

}  // namespace

Symbol Symbol::square_root(const Int& radicand) {
  if (radicand <= 1) throw InvalidArgument("sqrt symbol requires radicand > 1");
  if (!is_squarefree(radicand)) {
    throw InvalidArgument("sqrt symbol requires a squarefree radicand, got " + radicand.str());
  }
  Symbol s;
  s.is_sqrt_ = true;
  s.radicand_ = radicand;
  s.name_ = "sqrt(" + radicand.str() + ")";
  return s;
}

Symbol Symbol::declared(std::string name) {
  if (name.empty()) throw InvalidArgument("declared symbol requires a name");
  Symbol s;
  s.is_sqrt_ = false;
  s.name_ = std::move(name);
  return s;
}

std::pair<Rat, Rat> Symbol::enclosure(unsigned precision_bits) const {
  if (!is_sqrt_) throw InvalidArgument("declared symbol '" + name_ + "' has no numeric enclosure");
  // floor(sqrt(d * 4^p)) / 2^p brackets sqrt(d) with width 2^-p.
  Int scaled = radicand_ << (2 * precision_bits);
  Int root = boost::multiprecision::sqrt(scaled);
  Int denom = Int(1) << precision_bits;
  return {Rat(root, denom), Rat(root + 1, denom)};
}

bool Symbol::operator==(const Symbol& other) const {
  return is_sqrt_ == other.is_sqrt_ && radicand_ == other.radicand_ && name_ == other.name_;
}

bool Symbol::operator<(const Symbol& other) const {
  if (is_sqrt_ != other.is_sqrt_) return is_sqrt_;  // square roots first
  if (is_sqrt_) return radicand_ < other.radicand_;
  return name_ < other.name_;
}

SymbolicNumber::SymbolicNumber(Rat rational, std::vector<std::pair<Symbol, Rat>> terms)
    : rational_(std::move(rational)) {
  std::map<Symbol, Rat> merged;
  for (auto& [sym, coeff] : terms) {
    if (coeff == 0) continue;
    auto [it, inserted] = merged.emplace(sym, coeff);
    if (!inserted) it->second += coeff;
  }
  for (auto& [sym, coeff] : merged) {
    if (coeff != 0) terms_.emplace_back(sym, coeff);
  }
}

bool SymbolicNumber::has_declared_symbol() const {
  for (const auto& [sym, coeff] : terms_) {
    if (!sym.is_square_root()) return true;
  }
  return false;
}

SymbolicNumber SymbolicNumber::operator+(const SymbolicNumber& other) const {
  std::vector<std::pair<Symbol, Rat>> terms = terms_;
  terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
  return SymbolicNumber(rational_ + other.rational_, std::move(terms));
}

SymbolicNumber SymbolicNumber::operator-(const SymbolicNumber& other) const { return *this + (-other); }

SymbolicNumber SymbolicNumber::operator-() const {
  std::vector<std::pair<Symbol, Rat>> terms;
  terms.reserve(terms_.size());
  for (const auto& [sym, coeff] : terms_) terms.emplace_back(sym, -coeff);
  return SymbolicNumber(-rational_, std::move(terms));
}

SymbolicNumber SymbolicNumber::operator*(const Rat& scalar) const {
  std::vector<std::pair<Symbol, Rat>> terms;
  terms.reserve(terms_.size());
  for (const auto& [sym, coeff] : terms_) terms.emplace_back(sym, coeff * scalar);
  return SymbolicNumber(rational_ * scalar, std::move(terms));
}

bool SymbolicNumber::operator==(const SymbolicNumber& other) const {
  if (rational_ != other.rational_ || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].first == other.terms_[i].first) || terms_[i].second != other.terms_[i].second) return false;
  }
  return true;
}

std::pair<Rat, Rat> SymbolicNumber::enclosure(unsigned precision_bits) const {
  Rat lo = rational_, hi = rational_;
  for (const auto& [sym, coeff] : terms_) {
    auto [slo, shi] = sym.enclosure(precision_bits);
    if (coeff >= 0) {
      lo += coeff * slo;
      hi += coeff * shi;
    } else {
      lo += coeff * shi;
      hi += coeff * slo;
    }
  }
  return {lo, hi};
}

int SymbolicNumber::sign() const {
  if (is_zero()) return 0;
  if (terms_.empty()) return rational_ > 0 ? 1 : -1;
  // Nonzero by Q-linear independence of the symbols; refine until decided.
  for (unsigned bits = 16; bits <= kMaxPrecisionBits; bits *= 2) {
    auto [lo, hi] = enclosure(bits);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  throw std::logic_error("sign: interval refinement failed to separate from zero");
}

Int SymbolicNumber::floor() const {
  if (terms_.empty()) return rat_floor(rational_);
  for (unsigned bits = 32; bits <= kMaxPrecisionBits; bits *= 2) {
    auto [lo, hi] = enclosure(bits);
    Int flo = rat_floor(lo), fhi = rat_floor(hi);
    if (flo == fhi) return flo;
  }
  throw std::logic_error("floor: interval refinement failed (value too close to an integer)");
}

Int SymbolicNumber::round() const { return (*this + SymbolicNumber(Rat(1, 2))).floor(); }

std::string SymbolicNumber::to_string() const {
  std::string out = rat_to_string(rational_);
  for (const auto& [sym, coeff] : terms_) {
    out += " + " + rat_to_string(coeff) + "*" + sym.to_string();
  }
  return out;
}

SymbolicNumber operator*(const Rat& scalar, const SymbolicNumber& x) { return x * scalar; }

SymbolicPoint::SymbolicPoint(RatVec base, std::vector<std::pair<Symbol, RatVec>> terms) : base_(std::move(base)) {
  std::map<Symbol, RatVec> merged;
  for (auto& [sym, dir] : terms) {
    if (dir.size() != base_.size()) throw InvalidArgument("SymbolicPoint: direction dimension mismatch");
    auto [it, inserted] = merged.emplace(sym, dir);
    if (!inserted) it->second += dir;
  }
  for (auto& [sym, dir] : merged) {
    if (!dir.isZero()) terms_.emplace_back(sym, dir);
  }
}

SymbolicPoint SymbolicPoint::from_coordinates(const std::vector<SymbolicNumber>& coords) {
  const Eigen::Index n = static_cast<Eigen::Index>(coords.size());
  RatVec base(n);
  std::map<Symbol, RatVec> dirs;
  for (Eigen::Index i = 0; i < n; ++i) {
    base(i) = coords[static_cast<std::size_t>(i)].rational_part();
    for (const auto& [sym, coeff] : coords[static_cast<std::size_t>(i)].terms()) {
      auto [it, inserted] = dirs.emplace(sym, RatVec::Zero(n));
      it->second(i) += coeff;
    }
  }
  std::vector<std::pair<Symbol, RatVec>> terms(dirs.begin(), dirs.end());
  return SymbolicPoint(std::move(base), std::move(terms));
}

bool SymbolicPoint::has_declared_symbol() const {
  for (const auto& [sym, dir] : terms_) {
    if (!sym.is_square_root()) return true;
  }
  return false;
}

SymbolicNumber SymbolicPoint::coordinate(Eigen::Index i) const {
  std::vector<std::pair<Symbol, Rat>> terms;
  for (const auto& [sym, dir] : terms_) terms.emplace_back(sym, dir(i));
  return SymbolicNumber(base_(i), std::move(terms));
}

std::vector<SymbolicNumber> SymbolicPoint::coordinates() const {
  std::vector<SymbolicNumber> out;
  out.reserve(static_cast<std::size_t>(ambient_dim()));
  for (Eigen::Index i = 0; i < ambient_dim(); ++i) out.push_back(coordinate(i));
  return out;
}

SymbolicPoint SymbolicPoint::operator+(const RatVec& v) const {
  return SymbolicPoint(base_ + v, terms_);
}

SymbolicPoint SymbolicPoint::operator-(const RatVec& v) const { return *this + RatVec(-v); }

SymbolicPoint SymbolicPoint::operator*(const Rat& scalar) const {
  std::vector<std::pair<Symbol, RatVec>> terms;
  terms.reserve(terms_.size());
  for (const auto& [sym, dir] : terms_) terms.emplace_back(sym, RatVec(scalar * dir));
  return SymbolicPoint(scalar * base_, std::move(terms));
}

SymbolicPoint SymbolicPoint::operator-(const SymbolicPoint& other) const {
  std::vector<std::pair<Symbol, RatVec>> terms = terms_;
  for (const auto& [sym, dir] : other.terms_) terms.emplace_back(sym, RatVec(-dir));
  return SymbolicPoint(base_ - other.base_, std::move(terms));
}

SymbolicPoint SymbolicPoint::apply(const RatMat& lambda) const {
  if (lambda.cols() != ambient_dim()) throw InvalidArgument("SymbolicPoint::apply: dimension mismatch");
  std::vector<std::pair<Symbol, RatVec>> terms;
  for (const auto& [sym, dir] : terms_) terms.emplace_back(sym, RatVec(lambda * dir));
  return SymbolicPoint(lambda * base_, std::move(terms));
}

bool SymbolicPoint::operator==(const SymbolicPoint& other) const {
  if (base_ != other.base_ || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].first == other.terms_[i].first) || terms_[i].second != other.terms_[i].second) return false;
  }
  return true;
}

bool SymbolicPoint::sup_norm_less_than(const Rat& bound) const {
  for (Eigen::Index i = 0; i < ambient_dim(); ++i) {
    SymbolicNumber c = coordinate(i);
    if ((SymbolicNumber(bound) - c).sign() <= 0) return false;
    if ((SymbolicNumber(bound) + c).sign() <= 0) return false;
  }
  return true;
}

std::pair<Rat, Rat> SymbolicPoint::sup_norm_enclosure(unsigned precision_bits) const {
  Rat lo(0), hi(0);
  for (Eigen::Index i = 0; i < ambient_dim(); ++i) {
    auto [clo, chi] = coordinate(i).enclosure(precision_bits);
    Rat alo = std::max(std::max(clo, Rat(-chi)), Rat(0));
    Rat ahi = std::max(chi, Rat(-clo));
    lo = std::max(lo, alo);
    hi = std::max(hi, ahi);
  }
  return {lo, hi};
}

std::string SymbolicPoint::to_string() const {
  std::string out = vec_to_string(base_);
  for (const auto& [sym, dir] : terms_) out += " + " + sym.to_string() + "*" + vec_to_string(dir);
  return out;
}

}  // namespace conecalc
