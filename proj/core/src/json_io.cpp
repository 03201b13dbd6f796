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

#include "conecalc/json_io.hpp"

namespace conecalc {

namespace {

const json& expect_field(const json& j, const char* field, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected object");
  auto it = j.find(field);
  if (it == j.end()) throw SchemaError(path + "/" + field, "missing field");
  return *it;
}

const json* find_field(const json& j, const char* field) {
  if (!j.is_object()) return nullptr;
  auto it = j.find(field);
  return it == j.end() ? nullptr : &*it;
}

}  // namespace

Int json_to_int(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::runtime_error&) {
      throw SchemaError(path, "malformed integer");
    }
  }
  throw SchemaError(path, "expected integer");
}

Rat json_to_rat(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) {
    try {
      return rat_from_string(j.get<std::string>());
    } catch (const InvalidArgument& e) {
      throw SchemaError(path, e.what());
    }
  }
  throw SchemaError(path, "expected rational \"p/q\"");
}

IntVec json_to_int_vec(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected array of integers");
  IntVec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = json_to_int(j[i], path + "/" + std::to_string(i));
  }
  return v;
}

RatVec json_to_rat_vec(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected array of rationals");
  RatVec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = json_to_rat(j[i], path + "/" + std::to_string(i));
  }
  return v;
}

std::vector<IntVec> json_to_int_vecs(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected array of integer vectors");
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(json_to_int_vec(j[i], path + "/" + std::to_string(i)));
  return out;
}

RationalCone json_to_cone(const json& j, const std::string& path) {
  const json& rays = expect_field(j, "rays", path);
  std::vector<IntVec> gens = json_to_int_vecs(rays, path + "/rays");
  Eigen::Index dim = -1;
  if (const json* ad = find_field(j, "ambient_dim")) {
    dim = static_cast<Eigen::Index>(json_to_int(*ad, path + "/ambient_dim").convert_to<long>());
  } else if (!gens.empty()) {
    dim = gens[0].size();
  } else {
    throw SchemaError(path + "/ambient_dim", "required when rays is empty");
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].size() != dim) throw SchemaError(path + "/rays/" + std::to_string(i), "dimension mismatch");
  }
  try {
    return RationalCone(std::move(gens), dim);
  } catch (const InvalidArgument& e) {
    throw SchemaError(path + "/rays", e.what());
  }
}

RationalPolytope json_to_polytope(const json& j, const std::string& path) {
  const json& verts = expect_field(j, "vertices", path);
  if (!verts.is_array()) throw SchemaError(path + "/vertices", "expected array");
  std::vector<RatVec> points;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    points.push_back(json_to_rat_vec(verts[i], path + "/vertices/" + std::to_string(i)));
  }
  if (points.empty()) {
    if (const json* ad = find_field(j, "ambient_dim")) {
      return RationalPolytope::empty(
          static_cast<Eigen::Index>(json_to_int(*ad, path + "/ambient_dim").convert_to<long>()));
    }
    throw SchemaError(path + "/ambient_dim", "required when vertices is empty");
  }
  return RationalPolytope(std::move(points));
}

AffineMonoid json_to_monoid(const json& j, const std::string& path) {
  const json& gens = expect_field(j, "gens", path);
  std::vector<IntVec> g = json_to_int_vecs(gens, path + "/gens");
  Eigen::Index dim = -1;
  if (const json* ad = find_field(j, "ambient_dim")) {
    dim = static_cast<Eigen::Index>(json_to_int(*ad, path + "/ambient_dim").convert_to<long>());
  } else if (!g.empty()) {
    dim = g[0].size();
  } else {
    throw SchemaError(path + "/ambient_dim", "required when gens is empty");
  }
  Saturation flag = Saturation::Unknown;
  if (const json* s = find_field(j, "saturated")) {
    if (!s->is_string()) throw SchemaError(path + "/saturated", "expected \"yes\", \"no\" or \"unknown\"");
    std::string v = s->get<std::string>();
    if (v == "yes") flag = Saturation::Yes;
    else if (v == "no") flag = Saturation::No;
    else if (v == "unknown") flag = Saturation::Unknown;
    else throw SchemaError(path + "/saturated", "expected \"yes\", \"no\" or \"unknown\"");
  }
  try {
    return AffineMonoid(std::move(g), dim, flag);
  } catch (const InvalidArgument& e) {
    throw SchemaError(path + "/gens", e.what());
  }
}

Fan json_to_fan(const json& j, const std::string& path) {
  Fan fan;
  const json& cones = expect_field(j, "cones", path);
  if (!cones.is_array()) throw SchemaError(path + "/cones", "expected array");
  for (std::size_t i = 0; i < cones.size(); ++i) {
    fan.cones.push_back(json_to_cone(cones[i], path + "/cones/" + std::to_string(i)));
  }
  fan.support = json_to_cone(expect_field(j, "support", path), path + "/support");
  return fan;
}

IntLattice json_to_lattice(const json& j, const std::string& path) {
  std::vector<IntVec> gens = json_to_int_vecs(expect_field(j, "gens", path), path + "/gens");
  Eigen::Index dim = -1;
  if (const json* ad = find_field(j, "ambient_dim")) {
    dim = static_cast<Eigen::Index>(json_to_int(*ad, path + "/ambient_dim").convert_to<long>());
  } else if (!gens.empty()) {
    dim = gens[0].size();
  } else {
    throw SchemaError(path + "/ambient_dim", "required when gens is empty");
  }
  try {
    return IntLattice::from_generators(gens, dim);
  } catch (const InvalidArgument& e) {
    throw SchemaError(path + "/gens", e.what());
  }
}

namespace {

Symbol json_to_symbol(const json& j, const std::string& path, bool assume_independent) {
  if (!j.is_string()) throw SchemaError(path, "expected symbol string");
  std::string name = j.get<std::string>();
  if (name.rfind("sqrt(", 0) == 0 && name.back() == ')') {
    try {
      Int d(name.substr(5, name.size() - 6));
      return Symbol::square_root(d);
    } catch (const std::runtime_error&) {
      throw SchemaError(path, "malformed sqrt symbol");
    } catch (const InvalidArgument& e) {
      throw SchemaError(path, e.what());
    }
  }
  if (!assume_independent) {
    throw SchemaError(path, "declared symbol '" + name + "' requires \"assume_independent\": true");
  }
  return Symbol::declared(name);
}

}  // namespace

SymbolicNumber json_to_symbolic_number(const json& j, const std::string& path) {
  if (j.is_string() || j.is_number_integer()) return SymbolicNumber(json_to_rat(j, path));
  Rat rational = json_to_rat(expect_field(j, "rat", path), path + "/rat");
  bool assume = false;
  if (const json* a = find_field(j, "assume_independent")) {
    if (!a->is_boolean()) throw SchemaError(path + "/assume_independent", "expected boolean");
    assume = a->get<bool>();
  }
  std::vector<std::pair<Symbol, Rat>> terms;
  if (const json* irr = find_field(j, "irr")) {
    if (!irr->is_array()) throw SchemaError(path + "/irr", "expected array");
    for (std::size_t i = 0; i < irr->size(); ++i) {
      const json& term = (*irr)[i];
      std::string tpath = path + "/irr/" + std::to_string(i);
      if (!term.is_array() || term.size() != 2) throw SchemaError(tpath, "expected [coefficient, symbol]");
      Rat coeff = json_to_rat(term[0], tpath + "/0");
      Symbol sym = json_to_symbol(term[1], tpath + "/1", assume);
      terms.emplace_back(sym, coeff);
    }
  }
  return SymbolicNumber(rational, std::move(terms));
}

SymbolicPoint json_to_symbolic_point(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected array of symbolic numbers");
  std::vector<SymbolicNumber> coords;
  for (std::size_t i = 0; i < j.size(); ++i) {
    coords.push_back(json_to_symbolic_number(j[i], path + "/" + std::to_string(i)));
  }
  if (coords.empty()) throw SchemaError(path, "point needs at least one coordinate");
  return SymbolicPoint::from_coordinates(coords);
}

ToricVariety json_to_variety(const json& j, const std::string& path) {
  std::vector<IntVec> rays = json_to_int_vecs(expect_field(j, "rays", path), path + "/rays");
  const json& mc = expect_field(j, "max_cones", path);
  if (!mc.is_array()) throw SchemaError(path + "/max_cones", "expected array");
  std::vector<std::vector<int>> cones;
  for (std::size_t i = 0; i < mc.size(); ++i) {
    const json& c = mc[i];
    std::string cpath = path + "/max_cones/" + std::to_string(i);
    if (!c.is_array()) throw SchemaError(cpath, "expected array of ray indices");
    std::vector<int> idx;
    for (std::size_t k = 0; k < c.size(); ++k) {
      idx.push_back(static_cast<int>(json_to_int(c[k], cpath + "/" + std::to_string(k)).convert_to<long>()));
    }
    cones.push_back(std::move(idx));
  }
  try {
    return ToricVariety(std::move(rays), std::move(cones));
  } catch (const InvalidArgument& e) {
    throw SchemaError(path, e.what());
  }
}

TDivisor json_to_divisor(const json& j, const ToricVariety& x, const std::string& path) {
  RatVec coeffs = json_to_rat_vec(j, path);
  if (coeffs.size() != static_cast<Eigen::Index>(x.num_rays())) {
    throw SchemaError(path, "coefficient count does not match the ray list");
  }
  return TDivisor{std::move(coeffs)};
}

DivisorFamily json_to_family(const json& j, const ToricVariety& x, const std::string& path) {
  DivisorFamily family{x.zero_divisor(), {}, RationalPolytope::empty(0)};
  if (const json* base = find_field(j, "base")) {
    family.base = json_to_divisor(*base, x, path + "/base");
  }
  const json& dirs = expect_field(j, "directions", path);
  if (!dirs.is_array() || dirs.empty()) throw SchemaError(path + "/directions", "expected nonempty array");
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    family.directions.push_back(json_to_divisor(dirs[i], x, path + "/directions/" + std::to_string(i)));
  }
  family.parameters = json_to_polytope(expect_field(j, "parameters", path), path + "/parameters");
  if (family.parameters.ambient_dim() != static_cast<Eigen::Index>(family.directions.size())) {
    throw SchemaError(path + "/parameters", "parameter polytope dimension must match the direction count");
  }
  return family;
}

json int_vec_to_json(const IntVec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) >= std::numeric_limits<long long>::min() && v(i) <= std::numeric_limits<long long>::max()) {
      out.push_back(v(i).convert_to<long long>());
    } else {
      out.push_back(v(i).str());
    }
  }
  return out;
}

json rat_vec_to_json(const RatVec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(rat_to_string(v(i)));
  return out;
}

json int_vecs_to_json(const std::vector<IntVec>& v) {
  json out = json::array();
  for (const IntVec& x : v) out.push_back(int_vec_to_json(x));
  return out;
}

json cone_to_json(const RationalCone& c) {
  json out;
  out["rays"] = int_vecs_to_json(c.generators());
  out["ambient_dim"] = static_cast<long long>(c.ambient_dim());
  return out;
}

json polytope_to_json(const RationalPolytope& p) {
  json verts = json::array();
  for (const RatVec& v : p.vertices()) verts.push_back(rat_vec_to_json(v));
  json out;
  out["vertices"] = verts;
  out["ambient_dim"] = static_cast<long long>(p.ambient_dim());
  return out;
}

json monoid_to_json(const AffineMonoid& m) {
  json out;
  out["gens"] = int_vecs_to_json(m.generators());
  out["ambient_dim"] = static_cast<long long>(m.ambient_dim());
  switch (m.saturated_flag()) {
    case Saturation::Yes: out["saturated"] = "yes"; break;
    case Saturation::No: out["saturated"] = "no"; break;
    case Saturation::Unknown: out["saturated"] = "unknown"; break;
  }
  return out;
}

json fan_to_json(const Fan& f) {
  json cones = json::array();
  for (const RationalCone& c : f.cones) cones.push_back(cone_to_json(c));
  json out;
  out["cones"] = cones;
  out["support"] = cone_to_json(f.support);
  return out;
}

json symbolic_number_to_json(const SymbolicNumber& s) {
  json out;
  out["rat"] = rat_to_string(s.rational_part());
  json irr = json::array();
  bool declared = false;
  for (const auto& [sym, coeff] : s.terms()) {
    irr.push_back(json::array({rat_to_string(coeff), sym.to_string()}));
    if (!sym.is_square_root()) declared = true;
  }
  out["irr"] = irr;
  if (declared) out["assume_independent"] = true;
  return out;
}

json symbolic_point_to_json(const SymbolicPoint& p) {
  json out = json::array();
  for (const SymbolicNumber& c : p.coordinates()) out.push_back(symbolic_number_to_json(c));
  return out;
}

json subspace_to_json(const AffineSubspace& s) {
  json dirs = json::array();
  for (const RatVec& d : s.directions()) dirs.push_back(rat_vec_to_json(d));
  json out;
  out["base"] = rat_vec_to_json(s.base());
  out["directions"] = dirs;
  out["dim"] = static_cast<long long>(s.dim());
  return out;
}

json closure_to_json(const ClosureStructure& c) {
  json basis = json::array();
  for (const RatVec& b : c.subspace_basis) basis.push_back(rat_vec_to_json(b));
  json cosets = json::array();
  for (const RatVec& r : c.cosets) cosets.push_back(rat_vec_to_json(r));
  json out;
  out["subspace_basis"] = basis;
  out["cosets"] = cosets;
  out["dense"] = c.dense;
  out["component_order"] = c.component_order.str();
  return out;
}

json certificate_to_json(const ApproxCertificate& c) {
  json out;
  json points = json::array();
  for (const RatVec& w : c.points) points.push_back(rat_vec_to_json(w));
  out["points"] = points;
  json mult = json::array();
  for (const Int& k : c.multipliers) mult.push_back(k.str());
  out["multipliers"] = mult;
  json weights = json::array();
  for (const SymbolicNumber& r : c.weights) weights.push_back(symbolic_number_to_json(r));
  out["weights"] = weights;
  if (c.residual) out["residual"] = symbolic_point_to_json(*c.residual);
  if (c.anchor_sum) out["anchor_sum"] = c.anchor_sum->str();
  out["tail_in_minimal_subspace"] = c.tail_in_minimal_subspace;
  json bounds = json::array();
  for (const CertifiedBound& b : c.bounds) {
    json jb;
    jb["label"] = b.label;
    jb["bound"] = rat_to_string(b.bound);
    jb["enclosure"] = json::array({rat_to_string(b.enclosure_lo), rat_to_string(b.enclosure_hi)});
    bounds.push_back(jb);
  }
  out["bounds"] = bounds;
  return out;
}

}  // namespace conecalc
