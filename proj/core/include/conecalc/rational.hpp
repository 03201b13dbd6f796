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

#ifndef CONECALC_RATIONAL_HPP
#define CONECALC_RATIONAL_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace conecalc {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// mpq_rational keeps values in lowest terms with positive denominator, so
// equality of values is structural equality.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

/// Thrown on domain violations (bad dimensions, non-pointed cones, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when an input document does not match a command schema.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& what)
      : std::runtime_error(what + " at " + path), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);
/// Nearest integer; exact halves round toward +infinity.
Int rat_round(const Rat& q);

/// Serializes as "p" when the denominator is 1 and "p/q" otherwise.
std::string rat_to_string(const Rat& q);
/// Accepts "p" and "p/q" with optional sign; rejects zero denominators.
Rat rat_from_string(const std::string& s);

Int vec_gcd(const IntVec& v);
/// v / gcd(entries); the zero vector is returned unchanged.
IntVec primitive(const IntVec& v);
/// Clears denominators of a rational vector and divides by the content.
IntVec primitive(const RatVec& v);

RatVec to_rat(const IntVec& v);
IntVec to_int(const RatVec& v);  // requires integral entries

bool lex_less(const IntVec& a, const IntVec& b);
bool lex_less(const RatVec& a, const RatVec& b);

/// lcm of entry denominators (1 for the empty vector).
Int denominator_lcm(const RatVec& v);

std::string vec_to_string(const RatVec& v);
std::string vec_to_string(const IntVec& v);

}  // namespace conecalc

#endif  // CONECALC_RATIONAL_HPP
