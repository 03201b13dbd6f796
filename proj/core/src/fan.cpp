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

#include "conecalc/fan.hpp"

namespace conecalc {

namespace {

// The face of `cone` cut out by the facet normals vanishing on all of `f`.
RationalCone face_hull(const RationalCone& cone, const RationalCone& f) {
  std::vector<IntVec> eqs = cone.span_equations();
  for (const IntVec& phi : cone.facet_normals()) {
    bool vanishes = true;
    for (const IntVec& g : f.generators()) {
      if (to_rat(phi).dot(to_rat(g)) != 0) { vanishes = false; break; }
    }
    if (vanishes) eqs.push_back(phi);
  }
  return RationalCone::from_hrep(eqs, cone.facet_normals(), cone.ambient_dim());
}

bool is_face_of(const RationalCone& cone, const RationalCone& f) { return face_hull(cone, f) == f; }

}  // namespace

FanVerdict verify_fan(const Fan& fan) {
  FanVerdict verdict;
  const Eigen::Index n = fan.support.ambient_dim();

  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    if (fan.cones[i].ambient_dim() != n) {
      verdict.violation = "cone ambient dimension differs from support";
      verdict.witness_cones = {i, i};
      return verdict;
    }
    if (!fan.support.contains_cone(fan.cones[i])) {
      verdict.violation = "cone not contained in support";
      verdict.witness_cones = {i, i};
      verdict.witness_point = fan.cones[i].relint_point();
      return verdict;
    }
  }

  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    for (std::size_t j = i + 1; j < fan.cones.size(); ++j) {
      RationalCone meet = fan.cones[i].intersect(fan.cones[j]);
      if (!is_face_of(fan.cones[i], meet) || !is_face_of(fan.cones[j], meet)) {
        verdict.violation = "cones do not intersect in a common face";
        verdict.witness_cones = {i, j};
        verdict.witness_point = meet.relint_point();
        return verdict;
      }
    }
  }

  // Coverage. With the face condition established, the union covers the
  // support iff some cone has full support dimension and every facet wall of
  // every full-dimensional cone either leaves the support or is covered from
  // the other side.
  const Eigen::Index ds = fan.support.dim();
  if (ds == 0) {
    if (fan.cones.empty()) {
      verdict.violation = "support not covered (no cones)";
      verdict.witness_point = RatVec::Zero(n);
      return verdict;
    }
    verdict.ok = true;
    return verdict;
  }

  std::vector<IntVec> all_functionals;
  auto add_all = [&](const RationalCone& c) {
    for (const IntVec& f : c.facet_normals()) all_functionals.push_back(f);
    for (const IntVec& e : c.span_equations()) all_functionals.push_back(e);
  };
  for (const RationalCone& c : fan.cones) add_all(c);
  add_all(fan.support);

  bool any_full = false;
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    if (fan.cones[i].dim() != ds) continue;
    any_full = true;
    for (const IntVec& phi : fan.cones[i].facet_normals()) {
      std::vector<IntVec> eqs = fan.cones[i].span_equations();
      eqs.push_back(phi);
      RationalCone wall = RationalCone::from_hrep(eqs, fan.cones[i].facet_normals(), n);
      RatVec w = wall.relint_point();

      // Direction crossing the wall inside the span of the support.
      RatMat sys(static_cast<Eigen::Index>(fan.support.span_equations().size()) + 1, n);
      RatVec rhs = RatVec::Zero(sys.rows());
      for (std::size_t r = 0; r < fan.support.span_equations().size(); ++r) {
        sys.row(static_cast<Eigen::Index>(r)) = to_rat(fan.support.span_equations()[r]).transpose();
      }
      sys.row(sys.rows() - 1) = to_rat(phi).transpose();
      rhs(sys.rows() - 1) = 1;
      auto dir = solve_affine(sys, rhs);
      if (!dir) continue;  // phi degenerate on the support span; cannot happen for full-dim cones
      const RatVec& step = dir->point;

      // Step size small enough to preserve the sign of every functional that
      // does not vanish at w.
      Rat delta(1);
      bool have = false;
      for (const IntVec& psi : all_functionals) {
        Rat val = to_rat(psi).dot(w);
        if (val == 0) continue;
        Rat slope = to_rat(psi).dot(step);
        Rat mag = slope < 0 ? -slope : slope;
        if (mag < 1) mag = 1;
        Rat bound = (val < 0 ? -val : val) / mag;
        if (!have || bound < delta) delta = bound;
        have = true;
      }
      delta /= 2;

      RatVec p = w - delta * step;
      if (!fan.support.contains(p)) continue;  // wall on the support boundary
      bool covered = false;
      for (const RationalCone& c : fan.cones) {
        if (c.contains(p)) { covered = true; break; }
      }
      if (!covered) {
        verdict.violation = "support not covered across a wall";
        verdict.witness_cones = {i, i};
        verdict.witness_point = p;
        return verdict;
      }
    }
  }

  if (!any_full) {
    // All cones have lower dimension; search a relint point of the support
    // missed by every cone.
    RatVec p = fan.support.relint_point();
    Rat scale(1);
    for (int attempt = 0; attempt < 64; ++attempt) {
      bool hit = false;
      for (const RationalCone& c : fan.cones) {
        if (c.contains(p)) { hit = true; break; }
      }
      if (!hit && fan.support.relint_contains(p) && !p.isZero()) {
        verdict.violation = "support not covered (all cones lower-dimensional)";
        verdict.witness_point = p;
        return verdict;
      }
      // Perturb with growing geometric weights.
      scale += 1;
      p = RatVec::Zero(n);
      Rat weight(1);
      for (const IntVec& g : fan.support.generators()) {
        p += weight * to_rat(g);
        weight *= scale;
      }
    }
    verdict.violation = "support not covered (all cones lower-dimensional)";
    return verdict;
  }

  verdict.ok = true;
  return verdict;
}

}  // namespace conecalc
