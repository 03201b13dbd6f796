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

#include "commands.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "conecalc/json_io.hpp"
#include "conecalc/lp.hpp"

namespace conecalc::cli {

namespace {

using conecalc::json;

struct RawResult {
  int exit_code = 0;
  json body;
};

const json& field(const json& j, const char* name, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path.empty() ? "/" : path, "expected object");
  auto it = j.find(name);
  if (it == j.end()) throw SchemaError(path + "/" + name, "missing field");
  return *it;
}

const json* opt_field(const json& j, const char* name) {
  if (!j.is_object()) return nullptr;
  auto it = j.find(name);
  return it == j.end() ? nullptr : &*it;
}

long small_int(const json& j, const std::string& path) {
  return json_to_int(j, path).convert_to<long>();
}

// ---------------------------------------------------------------------------
// Oracles

struct OracleHolder {
  std::shared_ptr<ToricVariety> variety;  // keeps toric oracles alive
  RayOracle oracle;
};

OracleHolder parse_oracle(const json& j, const std::string& path) {
  OracleHolder out;
  std::string type = field(j, "type", path).get<std::string>();
  if (type == "toric_mob") {
    out.variety = std::make_shared<ToricVariety>(json_to_variety(field(j, "variety", path), path + "/variety"));
    const json& dirs = field(j, "directions", path);
    if (!dirs.is_array() || dirs.empty()) throw SchemaError(path + "/directions", "expected nonempty array");
    std::vector<TDivisor> directions;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      directions.push_back(json_to_divisor(dirs[i], *out.variety, path + "/directions/" + std::to_string(i)));
    }
    const ToricVariety* xp = out.variety.get();
    RayOracle base = toric_mob_oracle(*xp, directions);
    out.oracle = base;
    return out;
  }
  if (type == "table") {
    long dim = small_int(field(j, "ambient_dim", path), path + "/ambient_dim");
    long value_dim = small_int(field(j, "value_dim", path), path + "/value_dim");
    std::vector<IntVec> gens;
    if (const json* dg = opt_field(j, "domain_gens")) {
      gens = json_to_int_vecs(*dg, path + "/domain_gens");
    } else {
      for (long i = 0; i < dim; ++i) {
        IntVec e = IntVec::Zero(dim);
        e(i) = 1;
        gens.push_back(e);
      }
    }
    auto values = std::make_shared<std::map<std::string, RatVec>>();
    const json& vals = field(j, "values", path);
    if (!vals.is_array()) throw SchemaError(path + "/values", "expected array");
    for (std::size_t i = 0; i < vals.size(); ++i) {
      std::string vpath = path + "/values/" + std::to_string(i);
      IntVec p = json_to_int_vec(field(vals[i], "point", vpath), vpath + "/point");
      RatVec v = json_to_rat_vec(field(vals[i], "value", vpath), vpath + "/value");
      if (v.size() != value_dim) throw SchemaError(vpath + "/value", "value dimension mismatch");
      (*values)[vec_to_string(p)] = v;
    }
    auto stab = std::make_shared<std::map<std::string, Int>>();
    if (const json* st = opt_field(j, "stabilizers")) {
      if (!st->is_array()) throw SchemaError(path + "/stabilizers", "expected array");
      for (std::size_t i = 0; i < st->size(); ++i) {
        std::string spath = path + "/stabilizers/" + std::to_string(i);
        IntVec p = json_to_int_vec(field((*st)[i], "point", spath), spath + "/point");
        (*stab)[vec_to_string(p)] = json_to_int(field((*st)[i], "iota", spath), spath + "/iota");
      }
    }
    out.oracle.domain = AffineMonoid(gens, dim);
    out.oracle.value_dim = value_dim;
    out.oracle.evaluate = [values, value_dim](const IntVec& s) {
      auto it = values->find(vec_to_string(s));
      if (it == values->end()) {
        throw InvalidArgument("oracle table has no value at " + vec_to_string(s));
      }
      return it->second;
    };
    out.oracle.stabilization = [stab](const IntVec& s) {
      auto it = stab->find(vec_to_string(s));
      return it == stab->end() ? Int(0) : it->second;
    };
    return out;
  }
  throw SchemaError(path + "/type", "unknown oracle type '" + type + "'");
}

PWLMap parse_claim(const json& j, const std::string& path) {
  PWLMap claim;
  claim.fan = json_to_fan(field(j, "fan", path), path + "/fan");
  const json& pieces = field(j, "pieces", path);
  if (!pieces.is_array()) throw SchemaError(path + "/pieces", "expected array of matrices");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const json& rows = pieces[i];
    std::string ppath = path + "/pieces/" + std::to_string(i);
    if (!rows.is_array() || rows.empty()) throw SchemaError(ppath, "expected nonempty matrix");
    RatMat m(static_cast<Eigen::Index>(rows.size()),
             static_cast<Eigen::Index>(rows[0].is_array() ? rows[0].size() : 0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      RatVec row = json_to_rat_vec(rows[r], ppath + "/" + std::to_string(r));
      if (row.size() != m.cols()) throw SchemaError(ppath + "/" + std::to_string(r), "ragged matrix");
      m.row(static_cast<Eigen::Index>(r)) = row.transpose();
    }
    claim.pieces.push_back(std::move(m));
  }
  return claim;
}

// ---------------------------------------------------------------------------
// Command handlers

RawResult cmd_hilbert(const json& in, const Options&) {
  RationalCone cone = json_to_cone(in, "");
  json out;
  out["hilbert_basis"] = int_vecs_to_json(hilbert_basis(cone));
  return {0, out};
}

RawResult cmd_saturate(const json& in, const Options&) {
  AffineMonoid m = json_to_monoid(in, "");
  json out;
  out["monoid"] = monoid_to_json(saturate(m));
  return {0, out};
}

RawResult cmd_truncate(const json& in, const Options&) {
  AffineMonoid m = json_to_monoid(in, "");
  json out;
  if (const json* ks = opt_field(in, "kappas")) {
    if (!ks->is_array()) throw SchemaError("/kappas", "expected array");
    std::vector<Int> kappas;
    for (std::size_t i = 0; i < ks->size(); ++i) {
      kappas.push_back(json_to_int((*ks)[i], "/kappas/" + std::to_string(i)));
    }
    out["monoid"] = monoid_to_json(truncate(m, kappas));
  } else {
    Int kappa = json_to_int(field(in, "kappa", ""), "/kappa");
    out["monoid"] = monoid_to_json(truncate(m, kappa));
  }
  return {0, out};
}

RawResult cmd_preimage(const json& in, const Options&) {
  AffineMonoid m = json_to_monoid(field(in, "monoid", ""), "/monoid");
  RationalCone target = json_to_cone(field(in, "target_cone", ""), "/target_cone");
  std::vector<IntVec> rows = json_to_int_vecs(field(in, "matrix", ""), "/matrix");
  if (rows.empty()) throw SchemaError("/matrix", "expected nonempty matrix");
  IntMat lambda(static_cast<Eigen::Index>(rows.size()), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != lambda.cols()) throw SchemaError("/matrix/" + std::to_string(i), "ragged matrix");
    lambda.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  json out;
  out["monoid"] = monoid_to_json(monoid_preimage(lambda, target, m));
  return {0, out};
}

RawResult cmd_fan_verify(const json& in, const Options&) {
  Fan fan = json_to_fan(in, "");
  FanVerdict v = verify_fan(fan);
  json out;
  out["ok"] = v.ok;
  if (!v.ok) {
    out["violation"] = v.violation;
    if (v.witness_point) out["witness"] = rat_vec_to_json(*v.witness_point);
    if (v.witness_cones) {
      out["witness_cones"] = json::array({v.witness_cones->first, v.witness_cones->second});
    }
  }
  return {v.ok ? 0 : 2, out};
}

RawResult cmd_dioph_subspace(const json& in, const Options&) {
  SymbolicPoint x = json_to_symbolic_point(field(in, "point", ""), "/point");
  json out;
  out["subspace"] = subspace_to_json(smallest_rational_affine(x));
  if (const json* lam = opt_field(in, "map")) {
    std::vector<IntVec> rows = json_to_int_vecs(*lam, "/map");
    if (rows.empty()) throw SchemaError("/map", "expected nonempty matrix");
    RatMat m(static_cast<Eigen::Index>(rows.size()), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = to_rat(rows[i]).transpose();
    out["pushforward"] = subspace_to_json(pushforward_subspace(m, x));
  }
  return {0, out};
}

RawResult cmd_dioph_closure(const json& in, const Options&) {
  SymbolicPoint x = json_to_symbolic_point(field(in, "point", ""), "/point");
  IntLattice lattice = json_to_lattice(field(in, "lattice", ""), "/lattice");
  json out;
  out["closure"] = closure_to_json(closure_structure(x, lattice));
  return {0, out};
}

RawResult cmd_dioph_simplex(const json& in, const Options&) {
  SymbolicPoint x = json_to_symbolic_point(field(in, "point", ""), "/point");
  Int k = json_to_int(field(in, "k", ""), "/k");
  Rat eps = json_to_rat(field(in, "eps", ""), "/eps");
  json out;
  out["certificate"] = certificate_to_json(approximate_simplex(x, k, eps));
  return {0, out};
}

RawResult cmd_dioph_anchored(const json& in, const Options&) {
  SymbolicPoint x = json_to_symbolic_point(field(in, "point", ""), "/point");
  Rat eps = json_to_rat(field(in, "eps", ""), "/eps");
  Rat eta = json_to_rat(field(in, "eta", ""), "/eta");
  RatVec w1 = json_to_rat_vec(field(in, "w1", ""), "/w1");
  Int k1 = json_to_int(field(in, "k1", ""), "/k1");
  json out;
  out["certificate"] = certificate_to_json(approximate_anchored(x, eps, eta, w1, k1));
  return {0, out};
}

RawResult cmd_pwl_straighten(const json& in, const Options&) {
  OracleHolder holder = parse_oracle(field(in, "oracle", ""), "/oracle");
  std::vector<IntVec> rays = json_to_int_vecs(field(in, "rays", ""), "/rays");
  StraightenResult res = straighten(holder.oracle, rays);
  json values = json::array();
  for (const RatVec& v : res.values) values.push_back(rat_vec_to_json(v));
  json out;
  out["rays"] = int_vecs_to_json(res.rays);
  out["values"] = values;
  return {0, out};
}

RawResult cmd_pwl_trunc_check(const json& in, const Options&) {
  OracleHolder holder = parse_oracle(field(in, "oracle", ""), "/oracle");
  RationalCone cone = json_to_cone(field(in, "cone", ""), "/cone");
  Int p_max = json_to_int(field(in, "p_max", ""), "/p_max");
  int i_max = 6;
  if (const json* im = opt_field(in, "i_max")) i_max = static_cast<int>(small_int(*im, "/i_max"));
  TruncationCheck check = check_additivity_up_to_truncation(holder.oracle, cone, p_max, i_max);
  json out;
  switch (check.kind) {
    case TruncationCheck::Kind::Certified: {
      out["verdict"] = "certified";
      out["p"] = check.p.str();
      out["samples"] = int_vecs_to_json(check.sample_points);
      return {0, out};
    }
    case TruncationCheck::Kind::Counterexample: {
      out["verdict"] = "counterexample";
      out["detail"] = check.detail;
      if (check.violation) {
        out["pair"] = json::array({int_vec_to_json(check.violation->first), int_vec_to_json(check.violation->second)});
      }
      return {2, out};
    }
    case TruncationCheck::Kind::Inconclusive:
    default: {
      out["verdict"] = "inconclusive";
      out["detail"] = check.detail;
      return {3, out};
    }
  }
}

RawResult cmd_pwl_verify(const json& in, const Options& opts) {
  OracleHolder holder = parse_oracle(field(in, "oracle", ""), "/oracle");
  PWLMap claim = parse_claim(field(in, "claim", ""), "/claim");
  int budget = 8;
  if (const json* b = opt_field(in, "budget")) budget = static_cast<int>(small_int(*b, "/budget"));
  PWLVerdict v = verify_pwl(holder.oracle, claim, budget, opts.seed);
  json out;
  switch (v.kind) {
    case PWLVerdict::Kind::Verified:
      out["verdict"] = "verified";
      return {0, out};
    case PWLVerdict::Kind::Counterexample:
      out["verdict"] = "counterexample";
      break;
    case PWLVerdict::Kind::FanInvalid:
      out["verdict"] = "fan_invalid";
      break;
    case PWLVerdict::Kind::Inconclusive:
      out["verdict"] = "inconclusive";
      break;
  }
  out["detail"] = v.detail;
  if (v.cone_index) out["cone"] = static_cast<long long>(*v.cone_index);
  if (v.point) out["point"] = int_vec_to_json(*v.point);
  if (v.expected) out["expected"] = rat_vec_to_json(*v.expected);
  if (v.actual) out["actual"] = rat_vec_to_json(*v.actual);
  return {v.kind == PWLVerdict::Kind::Inconclusive ? 3 : 2, out};
}

RawResult cmd_toric_polytope(const json& in, const Options&) {
  ToricVariety x = json_to_variety(field(in, "variety", ""), "/variety");
  TDivisor d = json_to_divisor(field(in, "coeffs", ""), x, "/coeffs");
  json out;
  out["polytope"] = polytope_to_json(divisor_polytope(x, d));
  return {0, out};
}

RawResult cmd_toric_h0(const json& in, const Options&) {
  ToricVariety x = json_to_variety(field(in, "variety", ""), "/variety");
  TDivisor d = json_to_divisor(field(in, "coeffs", ""), x, "/coeffs");
  json out;
  out["h0"] = h0(x, d).str();
  return {0, out};
}

RawResult cmd_toric_fixmob(const json& in, const Options&) {
  ToricVariety x = json_to_variety(field(in, "variety", ""), "/variety");
  TDivisor d = json_to_divisor(field(in, "coeffs", ""), x, "/coeffs");
  FixMob fm = fix_mob(x, d);
  json out;
  out["fix"] = rat_vec_to_json(fm.fix.coeffs);
  out["mob"] = rat_vec_to_json(fm.mob.coeffs);
  out["witnesses"] = int_vecs_to_json(fm.witnesses);
  return {0, out};
}

RawResult cmd_toric_ord(const json& in, const Options&) {
  ToricVariety x = json_to_variety(field(in, "variety", ""), "/variety");
  TDivisor d = json_to_divisor(field(in, "coeffs", ""), x, "/coeffs");
  int ray = static_cast<int>(small_int(field(in, "ray", ""), "/ray"));
  OrdValue v = asymptotic_ord(x, ray, d);
  json out;
  out["value"] = rat_to_string(v.value);
  out["witness"] = rat_vec_to_json(v.witness);
  return {0, out};
}

RawResult cmd_toric_bsl(const json& in, const Options&) {
  ToricVariety x = json_to_variety(field(in, "variety", ""), "/variety");
  TDivisor d = json_to_divisor(field(in, "coeffs", ""), x, "/coeffs");
  std::string mode = field(in, "mode", "").get<std::string>();
  BaseLocusMode m;
  if (mode == "stable") m = BaseLocusMode::Stable;
  else if (mode == "diminished") m = BaseLocusMode::Diminished;
  else throw SchemaError("/mode", "expected \"stable\" or \"diminished\"");
  BaseLocus b = base_locus_div(x, d, m);
  json out;
  out["rays"] = b.rays;
  out["all_of_x"] = b.all_of_x;
  return {0, out};
}

RawResult cmd_toric_region(const json& in, const Options&) {
  ToricVariety x = json_to_variety(field(in, "variety", ""), "/variety");
  DivisorFamily family = json_to_family(field(in, "family", ""), x, "/family");
  int ray = static_cast<int>(small_int(field(in, "ray", ""), "/ray"));
  json out;
  out["region"] = polytope_to_json(not_in_base_locus_region(x, family, ray));
  return {0, out};
}

RawResult cmd_toric_chambers(const json& in, const Options&) {
  ToricVariety x = json_to_variety(field(in, "variety", ""), "/variety");
  const json& dirs = field(in, "directions", "");
  if (!dirs.is_array() || dirs.empty()) throw SchemaError("/directions", "expected nonempty array");
  std::vector<TDivisor> directions;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    directions.push_back(json_to_divisor(dirs[i], x, "/directions/" + std::to_string(i)));
  }
  ChamberDecomposition cd = chamber_decomposition(x, directions);
  PWLMap claim = mob_claim_from_chambers(x, directions, cd);
  json chambers = json::array();
  for (std::size_t i = 0; i < cd.chambers.size(); ++i) {
    const ChamberData& ch = cd.chambers[i];
    json jc;
    jc["rays"] = int_vecs_to_json(ch.cone.generators());
    json ord = json::array();
    json mob = json::array();
    for (Eigen::Index r = 0; r < ch.ord_matrix.rows(); ++r) {
      ord.push_back(rat_vec_to_json(RatVec(ch.ord_matrix.row(r).transpose())));
      mob.push_back(rat_vec_to_json(RatVec(claim.pieces[i].row(r).transpose())));
    }
    jc["ord_matrix"] = ord;
    jc["mob_matrix"] = mob;
    jc["truncation"] = ch.truncation.str();
    chambers.push_back(jc);
  }
  json out;
  out["chambers"] = chambers;
  out["fan"] = fan_to_json(cd.fan);
  return {0, out};
}

RawResult cmd_toric_coxgen(const json& in, const Options&) {
  ToricVariety x = json_to_variety(field(in, "variety", ""), "/variety");
  const json& divs = field(in, "divisors", "");
  if (!divs.is_array() || divs.empty()) throw SchemaError("/divisors", "expected nonempty array");
  std::vector<TDivisor> divisors;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    divisors.push_back(json_to_divisor(divs[i], x, "/divisors/" + std::to_string(i)));
  }
  json gens = json::array();
  for (const auto& [degree, point] : multigraded_generators(x, divisors)) {
    json g;
    g["degree"] = int_vec_to_json(degree);
    g["point"] = int_vec_to_json(point);
    gens.push_back(g);
  }
  json out;
  out["generators"] = gens;
  return {0, out};
}

RawResult cmd_toric_restrict(const json& in, const Options&) {
  ToricVariety x = json_to_variety(field(in, "variety", ""), "/variety");
  TDivisor d = json_to_divisor(field(in, "coeffs", ""), x, "/coeffs");
  int gamma = static_cast<int>(small_int(field(in, "gamma", ""), "/gamma"));
  RestrictionData r = restrict_to_ray(x, gamma, d);
  json out;
  out["dimension"] = r.dimension.str();
  out["basis"] = int_vecs_to_json(r.basis_points);
  json ords = json::array();
  for (const auto& [ray, value] : r.restricted_ords) {
    ords.push_back(json::array({ray, rat_to_string(value)}));
  }
  out["restricted_ords"] = ords;
  out["image_zero"] = r.image_zero;
  return {0, out};
}

using Handler = RawResult (*)(const json&, const Options&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"hilbert", cmd_hilbert},
      {"saturate", cmd_saturate},
      {"truncate", cmd_truncate},
      {"preimage", cmd_preimage},
      {"fan-verify", cmd_fan_verify},
      {"dioph subspace", cmd_dioph_subspace},
      {"dioph closure", cmd_dioph_closure},
      {"dioph simplex", cmd_dioph_simplex},
      {"dioph anchored", cmd_dioph_anchored},
      {"pwl straighten", cmd_pwl_straighten},
      {"pwl trunc-check", cmd_pwl_trunc_check},
      {"pwl verify", cmd_pwl_verify},
      {"toric polytope", cmd_toric_polytope},
      {"toric h0", cmd_toric_h0},
      {"toric fixmob", cmd_toric_fixmob},
      {"toric ord", cmd_toric_ord},
      {"toric bsl", cmd_toric_bsl},
      {"toric region", cmd_toric_region},
      {"toric chambers", cmd_toric_chambers},
      {"toric coxgen", cmd_toric_coxgen},
      {"toric restrict", cmd_toric_restrict},
  };
  return table;
}

void render_table(const json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      render_table(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      render_table(j[i], prefix + "[" + std::to_string(i) + "]", os);
    }
    if (j.empty()) os << prefix << " = []\n";
  } else {
    os << prefix << " = " << j.dump() << "\n";
  }
}

std::string render(const json& body, const Options& opts) {
  if (opts.format == "table") {
    std::ostringstream os;
    render_table(body, "", os);
    return os.str();
  }
  return body.dump() + "\n";
}

}  // namespace

CommandResult run_command(const std::string& name, const json& input, const Options& opts) {
  auto it = handlers().find(name);
  if (it == handlers().end()) {
    json err;
    err["error"] = "unknown command '" + name + "'";
    return {1, render(err, opts)};
  }
  try {
    RawResult raw = it->second(input, opts);
    return {raw.exit_code, render(raw.body, opts)};
  } catch (const SchemaError& e) {
    json err;
    err["error"] = e.what();
    err["path"] = e.path();
    return {1, render(err, opts)};
  } catch (const InvalidArgument& e) {
    json err;
    err["error"] = e.what();
    return {1, render(err, opts)};
  } catch (const std::exception& e) {
    json err;
    err["error"] = std::string("internal error: ") + e.what();
    return {1, render(err, opts)};
  }
}

CommandResult run_suite(const json& suite, const Options& opts, const std::string& base_dir) {
  json report;
  json entries = json::array();
  int failures = 0;

  const json* scenarios = opt_field(suite, "scenarios");
  if (!scenarios || !scenarios->is_array()) {
    json err;
    err["error"] = "missing field";
    err["path"] = "/scenarios";
    return {1, render(err, opts)};
  }

  for (std::size_t i = 0; i < scenarios->size(); ++i) {
    json scenario = (*scenarios)[i];
    json entry;
    std::string name = scenario.value("name", "scenario " + std::to_string(i));
    entry["name"] = name;

    if (const json* file = opt_field(scenario, "file")) {
      std::string path = base_dir.empty() ? file->get<std::string>() : base_dir + "/" + file->get<std::string>();
      std::ifstream fs(path);
      if (!fs) {
        entry["status"] = "fail";
        entry["reason"] = "scenario file missing: " + file->get<std::string>();
        entries.push_back(entry);
        ++failures;
        continue;
      }
      try {
        scenario = json::parse(fs);
      } catch (const json::parse_error& e) {
        entry["status"] = "fail";
        entry["reason"] = std::string("scenario file parse error: ") + e.what();
        entries.push_back(entry);
        ++failures;
        continue;
      }
      if (scenario.contains("name")) entry["name"] = scenario["name"];
    }

    if (!scenario.contains("command") || !scenario.contains("input")) {
      entry["status"] = "fail";
      entry["reason"] = "scenario needs \"command\" and \"input\"";
      entries.push_back(entry);
      ++failures;
      continue;
    }
    std::string command = scenario["command"].get<std::string>();
    Options scenario_opts = opts;
    scenario_opts.format = "json";
    if (scenario.contains("seed")) {
      scenario_opts.seed = scenario["seed"].get<std::uint64_t>();
    } else if (command == "pwl verify") {
      entry["status"] = "fail";
      entry["reason"] = "seed is mandatory for sampling commands";
      entries.push_back(entry);
      ++failures;
      continue;
    }

    CommandResult res = run_command(command, scenario["input"], scenario_opts);
    json got = json::parse(res.output);
    entry["exit_code"] = res.exit_code;
    bool ok = true;
    if (scenario.contains("expected_exit") && scenario["expected_exit"].get<int>() != res.exit_code) {
      ok = false;
      entry["reason"] = "exit code mismatch";
      entry["expected_exit"] = scenario["expected_exit"];
    }
    if (scenario.contains("expected") && scenario["expected"] != got) {
      ok = false;
      entry["reason"] = "output mismatch";
      entry["expected"] = scenario["expected"];
      entry["got"] = got;
    }
    if (!scenario.contains("expected") && res.exit_code == 1 && !scenario.contains("expected_exit")) {
      ok = false;
      entry["reason"] = "command error";
      entry["got"] = got;
    }
    entry["status"] = ok ? "pass" : "fail";
    if (!ok) ++failures;
    entries.push_back(entry);
  }

  report["scenarios"] = entries;
  report["total"] = scenarios->size();
  report["failed"] = failures;
  report["passed"] = scenarios->size() - failures;
  return {failures == 0 ? 0 : 2, render(report, opts)};
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

}  // namespace conecalc::cli
