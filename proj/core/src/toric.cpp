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

#include "conecalc/toric.hpp"

#include <algorithm>

#include "conecalc/lp.hpp"

namespace conecalc {

namespace {

void check_divisor(const ToricVariety& x, const TDivisor& d) {
  if (d.coeffs.size() != static_cast<Eigen::Index>(x.num_rays())) {
    throw InvalidArgument("divisor coefficients not aligned with the ray list");
  }
}

}  // namespace

ToricVariety::ToricVariety(std::vector<IntVec> rays, std::vector<std::vector<int>> max_cones)
    : rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
  if (rays_.empty()) throw InvalidArgument("toric variety needs rays");
  dim_ = rays_[0].size();
  if (dim_ < 1 || dim_ > 3) throw InvalidArgument("toric variety dimension must be 1, 2 or 3");
  for (const IntVec& r : rays_) {
    if (r.size() != dim_) throw InvalidArgument("ray dimension mismatch");
    if (r.isZero() || r != primitive(r)) throw InvalidArgument("rays must be primitive and nonzero");
  }
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    for (std::size_t j = i + 1; j < rays_.size(); ++j) {
      if (rays_[i] == rays_[j]) throw InvalidArgument("duplicate ray");
    }
  }

  std::vector<RationalCone> cones;
  smooth_ = true;
  for (const std::vector<int>& c : max_cones_) {
    if (static_cast<Eigen::Index>(c.size()) != dim_) {
      throw InvalidArgument("maximal cones of a simplicial fan need dim many rays");
    }
    std::vector<IntVec> gens;
    IntMat m(dim_, dim_);
    for (Eigen::Index i = 0; i < dim_; ++i) {
      int idx = c[static_cast<std::size_t>(i)];
      if (idx < 0 || idx >= static_cast<int>(rays_.size())) throw InvalidArgument("cone ray index out of range");
      gens.push_back(rays_[static_cast<std::size_t>(idx)]);
      m.col(i) = rays_[static_cast<std::size_t>(idx)];
    }
    RationalCone cone(gens, dim_);
    if (cone.dim() != dim_) throw InvalidArgument("maximal cone is not simplicial (dependent rays)");
    // |det| = 1 iff the cone is unimodular.
    Int det = 0;
    if (dim_ == 1) det = m(0, 0);
    if (dim_ == 2) det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (dim_ == 3) {
      det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
            m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }
    if (boost::multiprecision::abs(det) != 1) smooth_ = false;
    cones.push_back(std::move(cone));
  }
  fan_.cones = std::move(cones);
  fan_.support = RationalCone::full_space(dim_);
  FanVerdict fv = verify_fan(fan_);
  if (!fv.ok) throw InvalidArgument("fan is not a complete simplicial fan: " + fv.violation);

  // Strictly convex support function with integral coefficients via exact
  // LP: minimize sum a_rho with margin-1 convexity conditions.
  {
    const Eigen::Index nr = static_cast<Eigen::Index>(rays_.size());
    std::vector<RatVec> rows;
    std::vector<Rat> rhs;
    for (const std::vector<int>& c : max_cones_) {
      // m_sigma depends linearly on a: m_sigma = -(A_sigma^-1) a|_sigma.
      RatMat asig(dim_, dim_);
      for (Eigen::Index i = 0; i < dim_; ++i) {
        asig.row(i) = to_rat(rays_[static_cast<std::size_t>(c[static_cast<std::size_t>(i)])]).transpose();
      }
      RatMat inv = asig.inverse();
      for (std::size_t r = 0; r < rays_.size(); ++r) {
        if (std::find(c.begin(), c.end(), static_cast<int>(r)) != c.end()) continue;
        // <m_sigma, v_r> + a_r >= 1.
        RatVec row = RatVec::Zero(nr);
        RatVec vr = to_rat(rays_[r]);
        RatVec coeff_on_sigma = -(inv.transpose() * vr);
        for (Eigen::Index i = 0; i < dim_; ++i) row(c[static_cast<std::size_t>(i)]) += coeff_on_sigma(i);
        row(static_cast<Eigen::Index>(r)) += 1;
        rows.push_back(row);
        rhs.push_back(Rat(1));
      }
    }
    for (Eigen::Index r = 0; r < nr; ++r) {
      RatVec row = RatVec::Zero(nr);
      row(r) = 1;
      rows.push_back(row);
      rhs.push_back(Rat(1));
    }
    RatMat a(static_cast<Eigen::Index>(rows.size()), nr);
    RatVec b(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      a.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
      b(static_cast<Eigen::Index>(i)) = rhs[i];
    }
    std::vector<Relation> rel(rows.size(), Relation::Ge);
    RatVec c = RatVec::Ones(nr);
    LPResult res = solve_lp(a, b, rel, c, std::vector<bool>(static_cast<std::size_t>(nr), true));
    if (res.status != LPStatus::Optimal) {
      throw InvalidArgument("fan admits no strictly convex support function (non-projective)");
    }
    Int scale = denominator_lcm(res.x);
    ample_.coeffs = RatVec(Rat(scale) * res.x);
  }
}

const TDivisor& ToricVariety::ample_divisor() const { return ample_; }

TDivisor ToricVariety::ray_divisor(int ray_index) const {
  if (ray_index < 0 || ray_index >= static_cast<int>(rays_.size())) throw InvalidArgument("ray index out of range");
  RatVec c = RatVec::Zero(static_cast<Eigen::Index>(rays_.size()));
  c(ray_index) = 1;
  return TDivisor{c};
}

RationalPolytope divisor_polytope(const ToricVariety& x, const TDivisor& d) {
  check_divisor(x, d);
  std::vector<RatVec> rows;
  for (std::size_t r = 0; r < x.num_rays(); ++r) {
    RatVec row(x.dim() + 1);
    row(0) = d.coeffs(static_cast<Eigen::Index>(r));
    row.tail(x.dim()) = to_rat(x.rays()[r]);
    rows.push_back(row);
  }
  return RationalPolytope::from_hrep(rows, {}, x.dim());
}

Int h0(const ToricVariety& x, const TDivisor& d) {
  check_divisor(x, d);
  if (!d.is_integral()) throw InvalidArgument("h0: divisor must be integral");
  return Int(divisor_polytope(x, d).lattice_points().size());
}

FixMob fix_mob(const ToricVariety& x, const TDivisor& d) {
  check_divisor(x, d);
  if (!d.is_integral()) throw InvalidArgument("fix_mob: divisor must be integral");
  std::vector<IntVec> pts = divisor_polytope(x, d).lattice_points();
  if (pts.empty()) throw InvalidArgument("empty linear system");
  FixMob out;
  out.fix.coeffs = RatVec(d.coeffs.size());
  out.witnesses.resize(x.num_rays(), pts.front());
  for (std::size_t r = 0; r < x.num_rays(); ++r) {
    RatVec vr = to_rat(x.rays()[r]);
    Rat best;
    bool first = true;
    for (const IntVec& m : pts) {
      Rat val = vr.dot(to_rat(m)) + d.coeffs(static_cast<Eigen::Index>(r));
      if (first || val < best) {
        best = val;
        out.witnesses[r] = m;
        first = false;
      }
    }
    out.fix.coeffs(static_cast<Eigen::Index>(r)) = best;
  }
  out.mob.coeffs = d.coeffs - out.fix.coeffs;
  return out;
}

OrdValue asymptotic_ord(const ToricVariety& x, int ray_index, const TDivisor& d) {
  check_divisor(x, d);
  if (ray_index < 0 || ray_index >= static_cast<int>(x.num_rays())) throw InvalidArgument("ray index out of range");
  RationalPolytope p = divisor_polytope(x, d);
  if (p.is_empty()) throw InvalidArgument("kappa < 0: empty rational linear system");
  RatVec vr = to_rat(x.rays()[static_cast<std::size_t>(ray_index)]);
  OrdValue out;
  bool first = true;
  for (const RatVec& v : p.vertices()) {
    Rat val = vr.dot(v) + d.coeffs(ray_index);
    if (first || val < out.value) {
      out.value = val;
      out.witness = v;
      first = false;
    }
  }
  return out;
}

std::optional<Rat> asymptotic_ord_limit(const ToricVariety& x, int ray_index, const TDivisor& d,
                                        const TDivisor& ample) {
  check_divisor(x, d);
  check_divisor(x, ample);
  const Eigen::Index dim = x.dim();
  const std::size_t nr = x.num_rays();

  // Rows <m, v_r> + a_r + eps c_r >= 0; vertices from dim-subsets, affine
  // in eps. A subset contributes when its vertex path stays feasible on a
  // right neighborhood of 0.
  std::optional<Rat> best;
  std::vector<std::size_t> subset(static_cast<std::size_t>(dim));
  auto process = [&](const std::vector<std::size_t>& active) {
    RatMat a(dim, dim);
    RatVec b0(dim), b1(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      a.row(i) = to_rat(x.rays()[active[static_cast<std::size_t>(i)]]).transpose();
      b0(i) = -d.coeffs(static_cast<Eigen::Index>(active[static_cast<std::size_t>(i)]));
      b1(i) = -ample.coeffs(static_cast<Eigen::Index>(active[static_cast<std::size_t>(i)]));
    }
    if (rank(a) != dim) return;
    auto sol0 = solve_affine(a, b0);
    auto sol1 = solve_affine(a, b1);
    if (!sol0 || !sol1) return;
    // m(eps) = m0 + eps m1; feasible near 0+ iff every row value
    // alpha + beta*eps satisfies alpha > 0, or alpha == 0 and beta >= 0.
    for (std::size_t r = 0; r < nr; ++r) {
      RatVec vr = to_rat(x.rays()[r]);
      Rat alpha = vr.dot(sol0->point) + d.coeffs(static_cast<Eigen::Index>(r));
      Rat beta = vr.dot(sol1->point) + ample.coeffs(static_cast<Eigen::Index>(r));
      if (alpha < 0 || (alpha == 0 && beta < 0)) return;
    }
    RatVec vr = to_rat(x.rays()[static_cast<std::size_t>(ray_index)]);
    Rat value = vr.dot(sol0->point) + d.coeffs(ray_index);  // limit of the objective at eps = 0
    if (!best || value < *best) best = value;
  };
  auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (depth == subset.size()) {
      process(subset);
      return;
    }
    for (std::size_t i = start; i + (subset.size() - depth) <= nr; ++i) {
      subset[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return best;
}

BaseLocus base_locus_div(const ToricVariety& x, const TDivisor& d, BaseLocusMode mode) {
  check_divisor(x, d);
  BaseLocus out;
  if (mode == BaseLocusMode::Stable) {
    RationalPolytope p = divisor_polytope(x, d);
    if (p.is_empty()) {
      out.all_of_x = true;
      for (std::size_t r = 0; r < x.num_rays(); ++r) out.rays.push_back(static_cast<int>(r));
      return out;
    }
    for (std::size_t r = 0; r < x.num_rays(); ++r) {
      if (asymptotic_ord(x, static_cast<int>(r), d).value > 0) out.rays.push_back(static_cast<int>(r));
    }
    return out;
  }

  const TDivisor& ample = x.ample_divisor();
  for (std::size_t r = 0; r < x.num_rays(); ++r) {
    auto limit = asymptotic_ord_limit(x, static_cast<int>(r), d, ample);
    if (!limit) {
      out.all_of_x = true;
      out.rays.clear();
      for (std::size_t q = 0; q < x.num_rays(); ++q) out.rays.push_back(static_cast<int>(q));
      return out;
    }
    if (*limit > 0) out.rays.push_back(static_cast<int>(r));
  }
  return out;
}

TDivisor family_divisor(const ToricVariety& x, const DivisorFamily& family, const RatVec& t) {
  if (t.size() != static_cast<Eigen::Index>(family.directions.size())) {
    throw InvalidArgument("family_divisor: parameter dimension mismatch");
  }
  TDivisor d = family.base;
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    d.coeffs += t(i) * family.directions[static_cast<std::size_t>(i)].coeffs;
  }
  check_divisor(x, d);
  return d;
}

RationalPolytope not_in_base_locus_region(const ToricVariety& x, const DivisorFamily& family, int ray_index) {
  const Eigen::Index l = static_cast<Eigen::Index>(family.directions.size());
  const Eigen::Index dim = x.dim();
  if (family.parameters.is_empty()) return RationalPolytope::empty(l);
  if (family.parameters.ambient_dim() != l) throw InvalidArgument("parameter polytope dimension mismatch");

  // Incidence polytope in (t, m): t in the parameter polytope, m in
  // P_{Phi_t}, and the ray constraint tight.
  std::vector<RatVec> ineqs, eqs;
  auto lift_param_row = [&](const RatVec& row) {
    RatVec out = RatVec::Zero(1 + l + dim);
    out.head(1 + l) = row;
    return out;
  };
  for (const RatVec& row : family.parameters.facets()) ineqs.push_back(lift_param_row(row));
  for (const RatVec& row : family.parameters.hull_equations()) eqs.push_back(lift_param_row(row));

  auto ray_row = [&](std::size_t r) {
    RatVec row = RatVec::Zero(1 + l + dim);
    row(0) = family.base.coeffs(static_cast<Eigen::Index>(r));
    for (Eigen::Index i = 0; i < l; ++i) row(1 + i) = family.directions[static_cast<std::size_t>(i)].coeffs(static_cast<Eigen::Index>(r));
    RatVec vr = to_rat(x.rays()[r]);
    for (Eigen::Index j = 0; j < dim; ++j) row(1 + l + j) = vr(j);
    return row;
  };
  for (std::size_t r = 0; r < x.num_rays(); ++r) ineqs.push_back(ray_row(r));
  eqs.push_back(ray_row(static_cast<std::size_t>(ray_index)));

  RationalPolytope incidence = RationalPolytope::from_hrep(ineqs, eqs, l + dim);
  std::vector<RatVec> projected;
  for (const RatVec& v : incidence.vertices()) projected.push_back(v.head(l));
  if (projected.empty()) return RationalPolytope::empty(l);
  return RationalPolytope(std::move(projected));
}

RayOracle toric_mob_oracle(const ToricVariety& x, const std::vector<TDivisor>& directions) {
  const Eigen::Index l = static_cast<Eigen::Index>(directions.size());
  for (const TDivisor& d : directions) {
    check_divisor(x, d);
    if (!d.is_integral()) throw InvalidArgument("toric_mob_oracle: directions must be integral");
  }
  std::vector<IntVec> gens;
  for (Eigen::Index i = 0; i < l; ++i) {
    IntVec e = IntVec::Zero(l);
    e(i) = 1;
    gens.push_back(e);
  }
  RayOracle oracle;
  oracle.domain = AffineMonoid(gens, l, Saturation::Yes);
  oracle.value_dim = static_cast<Eigen::Index>(x.num_rays());

  auto combine = [&x, directions, l](const IntVec& s) {
    TDivisor d = TDivisor{RatVec::Zero(static_cast<Eigen::Index>(x.num_rays()))};
    for (Eigen::Index i = 0; i < l; ++i) d.coeffs += Rat(s(i)) * directions[static_cast<std::size_t>(i)].coeffs;
    return d;
  };
  oracle.evaluate = [&x, combine](const IntVec& s) {
    TDivisor d = combine(s);
    if (s.isZero()) return RatVec(RatVec::Zero(d.coeffs.size()));
    return fix_mob(x, d).mob.coeffs;
  };
  oracle.stabilization = [&x, combine](const IntVec& s) {
    TDivisor d = combine(s);
    if (s.isZero()) return Int(1);
    Int iota = 1;
    for (std::size_t r = 0; r < x.num_rays(); ++r) {
      OrdValue ord = asymptotic_ord(x, static_cast<int>(r), d);
      iota = boost::multiprecision::lcm(iota, denominator(ord.value));
      iota = boost::multiprecision::lcm(iota, denominator_lcm(ord.witness));
    }
    return iota;
  };
  return oracle;
}

std::vector<std::pair<IntVec, IntVec>> multigraded_generators(const ToricVariety& x,
                                                              const std::vector<TDivisor>& divisors) {
  const Eigen::Index l = static_cast<Eigen::Index>(divisors.size());
  const Eigen::Index dim = x.dim();
  for (const TDivisor& d : divisors) {
    check_divisor(x, d);
    if (!d.is_integral()) throw InvalidArgument("multigraded_generators: divisors must be integral");
  }
  std::vector<IntVec> ineqs;
  for (Eigen::Index i = 0; i < l; ++i) {
    IntVec row = IntVec::Zero(l + dim);
    row(i) = 1;
    ineqs.push_back(row);
  }
  for (std::size_t r = 0; r < x.num_rays(); ++r) {
    IntVec row(l + dim);
    for (Eigen::Index i = 0; i < l; ++i) row(i) = numerator(divisors[static_cast<std::size_t>(i)].coeffs(static_cast<Eigen::Index>(r)));
    for (Eigen::Index j = 0; j < dim; ++j) row(l + j) = x.rays()[r](j);
    ineqs.push_back(row);
  }
  RationalCone section = RationalCone::from_hrep({}, ineqs, l + dim);
  if (!section.is_pointed()) throw InvalidArgument("unbounded grading");
  std::vector<std::pair<IntVec, IntVec>> out;
  for (const IntVec& g : hilbert_basis(section)) {
    out.emplace_back(g.head(l), g.tail(dim));
  }
  return out;
}

RestrictionData restrict_to_ray(const ToricVariety& x, int gamma_index, const TDivisor& d) {
  check_divisor(x, d);
  if (!d.is_integral()) throw InvalidArgument("restrict_to_ray: divisor must be integral");
  if (gamma_index < 0 || gamma_index >= static_cast<int>(x.num_rays())) {
    throw InvalidArgument("ray index out of range");
  }
  RestrictionData out;
  TDivisor d_minus = d;
  d_minus.coeffs(gamma_index) -= 1;
  out.dimension = h0(x, d) - h0(x, d_minus);

  RatVec vg = to_rat(x.rays()[static_cast<std::size_t>(gamma_index)]);
  RationalPolytope p = divisor_polytope(x, d);
  for (const IntVec& m : p.lattice_points()) {
    if (vg.dot(to_rat(m)) + d.coeffs(gamma_index) == 0) out.basis_points.push_back(m);
  }
  out.image_zero = out.basis_points.empty();
  if (out.image_zero) return out;

  // Slab polytope: P_D with the Gamma constraint tight.
  std::vector<RatVec> ineqs, eqs;
  for (std::size_t r = 0; r < x.num_rays(); ++r) {
    RatVec row(x.dim() + 1);
    row(0) = d.coeffs(static_cast<Eigen::Index>(r));
    row.tail(x.dim()) = to_rat(x.rays()[r]);
    if (static_cast<int>(r) == gamma_index) eqs.push_back(row);
    else ineqs.push_back(row);
  }
  RationalPolytope slab = RationalPolytope::from_hrep(ineqs, eqs, x.dim());

  // Boundary divisors of Gamma: the walls, i.e. the other rays of the
  // maximal cones containing Gamma.
  std::vector<int> adjacent;
  for (const std::vector<int>& c : x.max_cones()) {
    if (std::find(c.begin(), c.end(), gamma_index) == c.end()) continue;
    for (int idx : c) {
      if (idx != gamma_index && std::find(adjacent.begin(), adjacent.end(), idx) == adjacent.end()) {
        adjacent.push_back(idx);
      }
    }
  }
  std::sort(adjacent.begin(), adjacent.end());
  for (int idx : adjacent) {
    RatVec vr = to_rat(x.rays()[static_cast<std::size_t>(idx)]);
    Rat best;
    bool first = true;
    for (const RatVec& v : slab.vertices()) {
      Rat val = vr.dot(v) + d.coeffs(idx);
      if (first || val < best) {
        best = val;
        first = false;
      }
    }
    out.restricted_ords.emplace_back(idx, best);
  }
  return out;
}

}  // namespace conecalc
