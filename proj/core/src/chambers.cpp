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

#include <algorithm>

#include "conecalc/toric.hpp"

namespace conecalc {

namespace {

struct AffinePiece {
  Rat lo, hi;        // validity interval inside [0, 1]
  Rat value, slope;  // objective alpha + beta * u
  bool empty = true;
};

TDivisor blend(const std::vector<TDivisor>& dirs, const Rat& s1, const Rat& s2) {
  TDivisor d;
  d.coeffs = RatVec(s1 * dirs[0].coeffs + s2 * dirs[1].coeffs);
  return d;
}

// Basic solutions of min <m, v_rho> + a_rho(u) over P(u) for the
// one-parameter divisor (1-u) D1 + u D2, as affine pieces in u.
std::vector<AffinePiece> parametric_pieces(const ToricVariety& x, const std::vector<TDivisor>& dirs,
                                           std::size_t target_ray) {
  const Eigen::Index dim = x.dim();
  const std::size_t nr = x.num_rays();
  std::vector<AffinePiece> pieces;

  std::vector<std::size_t> subset(static_cast<std::size_t>(dim));
  auto process = [&](const std::vector<std::size_t>& active) {
    RatMat a(dim, dim);
    RatVec b0(dim), bs(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      const std::size_t r = active[static_cast<std::size_t>(i)];
      a.row(i) = to_rat(x.rays()[r]).transpose();
      // a_r(u) = (1-u) a1_r + u a2_r; the constraint is <m, v_r> = -a_r(u).
      b0(i) = -dirs[0].coeffs(static_cast<Eigen::Index>(r));
      bs(i) = dirs[0].coeffs(static_cast<Eigen::Index>(r)) - dirs[1].coeffs(static_cast<Eigen::Index>(r));
    }
    if (rank(a) != dim) return;
    auto m0 = solve_affine(a, b0);
    auto m1 = solve_affine(a, bs);
    if (!m0 || !m1) return;

    AffinePiece piece;
    piece.lo = 0;
    piece.hi = 1;
    piece.empty = false;
    for (std::size_t r = 0; r < nr && !piece.empty; ++r) {
      RatVec vr = to_rat(x.rays()[r]);
      Rat alpha = vr.dot(m0->point) + dirs[0].coeffs(static_cast<Eigen::Index>(r));
      Rat beta = vr.dot(m1->point) + dirs[1].coeffs(static_cast<Eigen::Index>(r)) -
                 dirs[0].coeffs(static_cast<Eigen::Index>(r));
      if (beta == 0) {
        if (alpha < 0) piece.empty = true;
      } else if (beta > 0) {
        piece.lo = std::max(piece.lo, Rat(-alpha / beta));
      } else {
        piece.hi = std::min(piece.hi, Rat(-alpha / beta));
      }
    }
    if (piece.empty || piece.lo > piece.hi) return;
    RatVec vt = to_rat(x.rays()[target_ray]);
    piece.value = vt.dot(m0->point) + dirs[0].coeffs(static_cast<Eigen::Index>(target_ray));
    piece.slope = vt.dot(m1->point) + dirs[1].coeffs(static_cast<Eigen::Index>(target_ray)) -
                  dirs[0].coeffs(static_cast<Eigen::Index>(target_ray));
    pieces.push_back(piece);
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
  return pieces;
}

// Breakpoints of min over pieces on [0, 1].
std::vector<Rat> envelope_walls(const std::vector<AffinePiece>& pieces) {
  std::vector<Rat> candidates{Rat(0), Rat(1)};
  for (const AffinePiece& p : pieces) {
    candidates.push_back(p.lo);
    candidates.push_back(p.hi);
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      Rat ds = pieces[i].slope - pieces[j].slope;
      if (ds == 0) continue;
      Rat u = (pieces[j].value - pieces[i].value) / ds;
      if (u > 0 && u < 1) candidates.push_back(u);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::erase_if(candidates, [](const Rat& u) { return u < 0 || u > 1; });

  // Keep the candidates where the minimizing line actually changes.
  auto line_at = [&](const Rat& u) -> std::pair<Rat, Rat> {
    bool found = false;
    std::pair<Rat, Rat> best;
    Rat best_val;
    for (const AffinePiece& p : pieces) {
      if (u < p.lo || u > p.hi) continue;
      Rat val = p.value + p.slope * u;
      if (!found || val < best_val || (val == best_val && p.slope < best.second)) {
        best = {p.value, p.slope};
        best_val = val;
        found = true;
      }
    }
    if (!found) throw InvalidArgument("chamber_decomposition: empty section polytope inside the family");
    return best;
  };

  std::vector<Rat> walls;
  walls.push_back(candidates.front());
  for (std::size_t i = 0; i + 1 < candidates.size(); ++i) {
    Rat mid_l = i == 0 ? candidates[0] : (candidates[i - 1] + candidates[i]) / 2;
    Rat mid_r = (candidates[i] + candidates[i + 1]) / 2;
    if (i > 0 && line_at(mid_l) != line_at(mid_r)) walls.push_back(candidates[i]);
  }
  walls.push_back(candidates.back());
  std::sort(walls.begin(), walls.end());
  walls.erase(std::unique(walls.begin(), walls.end()), walls.end());
  return walls;
}

RatVec ord_vector(const ToricVariety& x, const TDivisor& d) {
  RatVec out(static_cast<Eigen::Index>(x.num_rays()));
  for (std::size_t r = 0; r < x.num_rays(); ++r) out(static_cast<Eigen::Index>(r)) = asymptotic_ord(x, static_cast<int>(r), d).value;
  return out;
}

Int stabilizer_candidate(const ToricVariety& x, const TDivisor& d) {
  Int p = 1;
  for (std::size_t r = 0; r < x.num_rays(); ++r) {
    OrdValue ord = asymptotic_ord(x, static_cast<int>(r), d);
    p = boost::multiprecision::lcm(p, denominator(ord.value));
    p = boost::multiprecision::lcm(p, denominator_lcm(ord.witness));
  }
  return p;
}

TDivisor scale_divisor(const TDivisor& d, const Rat& c) { return TDivisor{RatVec(c * d.coeffs)}; }

bool truncation_works(const ToricVariety& x, const std::vector<TDivisor>& basis_divisors, const Int& p,
                      int i_check) {
  for (const TDivisor& d : basis_divisors) {
    TDivisor pd = scale_divisor(d, Rat(p));
    RatVec expect = RatVec(Rat(p) * ord_vector(x, d));
    if (denominator_lcm(expect) != 1) return false;
    FixMob fm = fix_mob(x, pd);
    if (fm.fix.coeffs != expect) return false;
    for (int i = 2; i <= i_check; ++i) {
      FixMob fmi = fix_mob(x, scale_divisor(pd, Rat(i)));
      if (fmi.mob.coeffs != RatVec(Rat(i) * fm.mob.coeffs)) return false;
    }
  }
  for (std::size_t a = 0; a < basis_divisors.size(); ++a) {
    for (std::size_t b = a; b < basis_divisors.size(); ++b) {
      FixMob fa = fix_mob(x, scale_divisor(basis_divisors[a], Rat(p)));
      FixMob fb = fix_mob(x, scale_divisor(basis_divisors[b], Rat(p)));
      FixMob fab = fix_mob(x, TDivisor{RatVec(Rat(p) * (basis_divisors[a].coeffs + basis_divisors[b].coeffs))});
      if (fab.mob.coeffs != RatVec(fa.mob.coeffs + fb.mob.coeffs)) return false;
    }
  }
  return true;
}

ChamberData make_chamber(const ToricVariety& x, const std::vector<TDivisor>& directions, const IntVec& r1,
                         const IntVec& r2, int i_check) {
  ChamberData out;
  const Eigen::Index nr = static_cast<Eigen::Index>(x.num_rays());
  std::vector<IntVec> gens{r1};
  if (r2.size() > 0) gens.push_back(r2);
  out.cone = RationalCone(gens, r1.size());

  std::vector<TDivisor> gen_divs;
  for (const IntVec& g : out.cone.generators()) {
    TDivisor d;
    d.coeffs = RatVec::Zero(nr);
    for (Eigen::Index i = 0; i < g.size(); ++i) d.coeffs += Rat(g(i)) * directions[static_cast<std::size_t>(i)].coeffs;
    gen_divs.push_back(d);
  }

  // Additivity up to truncation is a statement about the chamber monoid, so
  // the certificate must cover its Hilbert basis, not only the extreme rays.
  std::vector<TDivisor> basis_divs;
  for (const IntVec& h : hilbert_basis(out.cone)) {
    TDivisor d;
    d.coeffs = RatVec::Zero(nr);
    for (Eigen::Index i = 0; i < h.size(); ++i) d.coeffs += Rat(h(i)) * directions[static_cast<std::size_t>(i)].coeffs;
    basis_divs.push_back(d);
  }

  const Eigen::Index l = static_cast<Eigen::Index>(directions.size());
  out.ord_matrix = RatMat::Zero(nr, l);
  if (l == 1) {
    out.ord_matrix.col(0) = ord_vector(x, gen_divs[0]);
  } else {
    RatMat rays_mat(2, 2);
    rays_mat.col(0) = to_rat(out.cone.generators()[0]);
    rays_mat.col(1) = to_rat(out.cone.generators()[1]);
    RatMat values(nr, 2);
    values.col(0) = ord_vector(x, gen_divs[0]);
    values.col(1) = ord_vector(x, gen_divs[1]);
    // Solve row * rays_mat = values row-wise.
    RatMat inv = rays_mat.inverse();
    out.ord_matrix = values * inv;
    // Linearity self-check at the generator sum.
    TDivisor mid;
    mid.coeffs = gen_divs[0].coeffs + gen_divs[1].coeffs;
    RatVec s = to_rat(out.cone.generators()[0]) + to_rat(out.cone.generators()[1]);
    if (ord_vector(x, mid) != RatVec(out.ord_matrix * s)) {
      throw std::logic_error("chamber_decomposition: ray order not linear on a chamber");
    }
  }

  Int cand = 1;
  for (const TDivisor& d : basis_divs) cand = boost::multiprecision::lcm(cand, stabilizer_candidate(x, d));
  if (basis_divs.size() >= 2) {
    for (std::size_t a = 0; a < basis_divs.size(); ++a) {
      for (std::size_t b = a + 1; b < basis_divs.size(); ++b) {
        TDivisor sum;
        sum.coeffs = basis_divs[a].coeffs + basis_divs[b].coeffs;
        cand = boost::multiprecision::lcm(cand, stabilizer_candidate(x, sum));
      }
    }
  }
  for (Int p = 1; p <= cand; ++p) {
    if (truncation_works(x, basis_divs, p, i_check)) {
      out.truncation = p;
      break;
    }
  }
  return out;
}

}  // namespace

ChamberDecomposition chamber_decomposition(const ToricVariety& x, const std::vector<TDivisor>& directions,
                                           int i_check) {
  if (directions.empty() || directions.size() > 2) {
    throw InvalidArgument("chamber_decomposition: 1 or 2 direction divisors supported");
  }
  for (const TDivisor& d : directions) {
    if (!d.is_integral()) throw InvalidArgument("chamber_decomposition: directions must be integral");
    if (divisor_polytope(x, d).is_empty()) {
      throw InvalidArgument("chamber_decomposition: directions must be effective");
    }
  }
  const Eigen::Index l = static_cast<Eigen::Index>(directions.size());
  ChamberDecomposition out;

  if (l == 1) {
    IntVec one(1);
    one << 1;
    out.chambers.push_back(make_chamber(x, directions, one, IntVec(), i_check));
    out.fan.cones.push_back(out.chambers[0].cone);
    out.fan.support = out.chambers[0].cone;
    return out;
  }

  // Walls of every per-ray parametric value function on the cross-section
  // (1-u, u), u in [0, 1].
  std::vector<Rat> walls{Rat(0), Rat(1)};
  for (std::size_t r = 0; r < x.num_rays(); ++r) {
    std::vector<AffinePiece> pieces = parametric_pieces(x, directions, r);
    for (const Rat& w : envelope_walls(pieces)) walls.push_back(w);
  }
  std::sort(walls.begin(), walls.end());
  walls.erase(std::unique(walls.begin(), walls.end()), walls.end());

  auto section_ray = [](const Rat& u) {
    RatVec s(2);
    s(0) = 1 - u;
    s(1) = u;
    return primitive(s);
  };

  for (std::size_t i = 0; i + 1 < walls.size(); ++i) {
    out.chambers.push_back(make_chamber(x, directions, section_ray(walls[i]), section_ray(walls[i + 1]), i_check));
    out.fan.cones.push_back(out.chambers.back().cone);
  }
  std::vector<IntVec> support_gens{section_ray(Rat(0)), section_ray(Rat(1))};
  out.fan.support = RationalCone(support_gens, 2);
  FanVerdict fv = verify_fan(out.fan);
  if (!fv.ok) throw std::logic_error("chamber_decomposition: produced subdivision is not a fan: " + fv.violation);
  return out;
}

PWLMap mob_claim_from_chambers(const ToricVariety& x, const std::vector<TDivisor>& directions,
                               const ChamberDecomposition& cd) {
  const Eigen::Index nr = static_cast<Eigen::Index>(x.num_rays());
  const Eigen::Index l = static_cast<Eigen::Index>(directions.size());
  RatMat coeff(nr, l);
  for (Eigen::Index i = 0; i < l; ++i) coeff.col(i) = directions[static_cast<std::size_t>(i)].coeffs;
  PWLMap claim;
  claim.fan = cd.fan;
  for (const ChamberData& ch : cd.chambers) claim.pieces.push_back(RatMat(coeff - ch.ord_matrix));
  return claim;
}

}  // namespace conecalc
