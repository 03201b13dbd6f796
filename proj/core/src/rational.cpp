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

#include "conecalc/rational.hpp"

#include <sstream>

namespace conecalc {

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw InvalidArgument("floor_div: division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

Int rat_floor(const Rat& q) { return floor_div(numerator(q), denominator(q)); }

Int rat_ceil(const Rat& q) { return ceil_div(numerator(q), denominator(q)); }

Int rat_round(const Rat& q) { return rat_floor(q + Rat(1, 2)); }

std::string rat_to_string(const Rat& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw InvalidArgument("rational with zero denominator: " + s);
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw InvalidArgument("malformed rational: '" + s + "'");
  }
}

Int vec_gcd(const IntVec& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, v(i));
  return g;
}

IntVec primitive(const IntVec& v) {
  Int g = vec_gcd(v);
  if (g == 0 || g == 1) return v;
  IntVec out = v;
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) /= g;
  return out;
}

IntVec primitive(const RatVec& v) {
  Int l = denominator_lcm(v);
  IntVec w(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Rat scaled = v(i) * l;
    w(i) = numerator(scaled);
  }
  return primitive(w);
}

RatVec to_rat(const IntVec& v) {
  RatVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rat(v(i));
  return out;
}

IntVec to_int(const RatVec& v) {
  IntVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (denominator(v(i)) != 1) throw InvalidArgument("to_int: non-integral entry " + rat_to_string(v(i)));
    out(i) = numerator(v(i));
  }
  return out;
}

bool lex_less(const IntVec& a, const IntVec& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

bool lex_less(const RatVec& a, const RatVec& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

Int denominator_lcm(const RatVec& v) {
  Int l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = boost::multiprecision::lcm(l, denominator(v(i)));
  return l;
}

std::string vec_to_string(const RatVec& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rat_to_string(v(i));
  }
  return out + ")";
}

std::string vec_to_string(const IntVec& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v(i).str();
  }
  return out + ")";
}

}  // namespace conecalc
