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

#ifndef CONECALC_JSON_IO_HPP
#define CONECALC_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "conecalc/dioph.hpp"
#include "conecalc/fan.hpp"
#include "conecalc/lattice.hpp"
#include "conecalc/monoid.hpp"
#include "conecalc/polytope.hpp"
#include "conecalc/symbolic.hpp"
#include "conecalc/toric.hpp"

namespace conecalc {

using json = nlohmann::json;

// Parsers validate shape and report failures as SchemaError with a
// JSON-pointer style path ("/rays/0"). Rationals travel as "p/q" strings
// ("p" when the denominator is 1); integers are accepted wherever a
// rational is expected.

Int json_to_int(const json& j, const std::string& path);
Rat json_to_rat(const json& j, const std::string& path);
IntVec json_to_int_vec(const json& j, const std::string& path);
RatVec json_to_rat_vec(const json& j, const std::string& path);
std::vector<IntVec> json_to_int_vecs(const json& j, const std::string& path);

RationalCone json_to_cone(const json& j, const std::string& path);
RationalPolytope json_to_polytope(const json& j, const std::string& path);
AffineMonoid json_to_monoid(const json& j, const std::string& path);
Fan json_to_fan(const json& j, const std::string& path);
IntLattice json_to_lattice(const json& j, const std::string& path);
SymbolicNumber json_to_symbolic_number(const json& j, const std::string& path);
SymbolicPoint json_to_symbolic_point(const json& j, const std::string& path);
ToricVariety json_to_variety(const json& j, const std::string& path);
TDivisor json_to_divisor(const json& j, const ToricVariety& x, const std::string& path);
DivisorFamily json_to_family(const json& j, const ToricVariety& x, const std::string& path);

json int_vec_to_json(const IntVec& v);
json rat_vec_to_json(const RatVec& v);
json int_vecs_to_json(const std::vector<IntVec>& v);
json cone_to_json(const RationalCone& c);
json polytope_to_json(const RationalPolytope& p);
json monoid_to_json(const AffineMonoid& m);
json fan_to_json(const Fan& f);
json symbolic_number_to_json(const SymbolicNumber& s);
json symbolic_point_to_json(const SymbolicPoint& p);
json subspace_to_json(const AffineSubspace& s);
json closure_to_json(const ClosureStructure& c);
json certificate_to_json(const ApproxCertificate& c);

}  // namespace conecalc

#endif  // CONECALC_JSON_IO_HPP
