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

#include "conecalc/monoid.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "conecalc/lp.hpp"

namespace conecalc {

namespace {

struct LexCmp {
  bool operator()(const IntVec& a, const IntVec& b) const { return lex_less(a, b); }
};

Eigen::Index dimension_guard() {
  if (const char* env = std::getenv("CONECALC_MAX_DIM")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<Eigen::Index>(v);
  }
  return 4;
}

// Lattice points of the half-open parallelepiped {sum t_i r_i : 0 <= t_i < 1}
// spanned by linearly independent integer vectors.
void parallelepiped_points(const std::vector<IntVec>& rays, Eigen::Index n, std::set<IntVec, LexCmp>& out) {
  const Eigen::Index d = static_cast<Eigen::Index>(rays.size());
  // Precompute the solver: RREF of [R | I] gives t = T x on the span and the
  // span membership equations.
  RatMat aug(n, d + n);
  for (Eigen::Index j = 0; j < d; ++j) aug.col(j) = to_rat(rays[static_cast<std::size_t>(j)]);
  aug.rightCols(n) = RatMat::Identity(n, n);
  std::vector<Eigen::Index> pivots = rref_in_place(aug);
  // Full column rank d: pivots of the first d columns must be 0..d-1.
  for (Eigen::Index j = 0; j < d; ++j) {
    if (static_cast<std::size_t>(j) >= pivots.size() || pivots[static_cast<std::size_t>(j)] != j) {
      throw InvalidArgument("parallelepiped_points: dependent rays");
    }
  }
  RatMat tmap = aug.block(0, d, d, n);          // t = tmap * x
  RatMat emap = aug.block(d, d, n - d, n);      // span equations: emap * x = 0

  std::vector<Int> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    Int l = 0, h = 0;
    for (const IntVec& r : rays) {
      if (r(j) < 0) l += r(j);
      else h += r(j);
    }
    lo[static_cast<std::size_t>(j)] = l;
    hi[static_cast<std::size_t>(j)] = h;
  }

  IntVec x(n);
  auto rec = [&](auto&& self, Eigen::Index j) -> void {
    if (j == n) {
      RatVec xr = to_rat(x);
      for (Eigen::Index i = 0; i < emap.rows(); ++i) {
        if (emap.row(i).dot(xr) != 0) return;
      }
      for (Eigen::Index i = 0; i < d; ++i) {
        Rat t = tmap.row(i).dot(xr);
        if (t < 0 || t >= 1) return;
      }
      if (!x.isZero()) out.insert(x);
      return;
    }
    for (Int v = lo[static_cast<std::size_t>(j)]; v <= hi[static_cast<std::size_t>(j)]; ++v) {
      x(j) = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<IntVec> hilbert_basis(const RationalCone& cone) {
  if (!cone.is_pointed()) throw InvalidArgument("hilbert_basis: not pointed");
  const Eigen::Index n = cone.ambient_dim();
  const Eigen::Index d = cone.dim();
  if (d > dimension_guard()) {
    throw InvalidArgument("hilbert_basis: cone dimension exceeds guard (set CONECALC_MAX_DIM to override)");
  }
  if (d == 0) return {};

  const std::vector<IntVec>& rays = cone.generators();
  std::set<IntVec, LexCmp> candidates(rays.begin(), rays.end());

  // Fundamental parallelepipeds of all independent d-subsets of extreme
  // rays. Every irreducible element lies in one of them.
  std::vector<std::size_t> subset(static_cast<std::size_t>(d));
  auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (depth == subset.size()) {
      std::vector<IntVec> sel;
      for (std::size_t i : subset) sel.push_back(rays[i]);
      RatMat m(static_cast<Eigen::Index>(sel.size()), n);
      for (std::size_t i = 0; i < sel.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = to_rat(sel[i]).transpose();
      if (rank(m) != d) return;
      parallelepiped_points(sel, n, candidates);
      return;
    }
    for (std::size_t i = start; i + (subset.size() - depth) <= rays.size(); ++i) {
      subset[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);

  // Keep points of the cone only (parallelepipeds may stick out), then
  // filter to irreducibles: x stays iff no candidate y != 0, x with
  // x - y in the cone.
  std::vector<IntVec> pool;
  for (const IntVec& c : candidates) {
    if (cone.contains(to_rat(c))) pool.push_back(c);
  }
  std::vector<IntVec> basis;
  for (const IntVec& x : pool) {
    bool reducible = false;
    for (const IntVec& y : pool) {
      if (y == x) continue;
      if (cone.contains(RatVec(to_rat(x) - to_rat(y)))) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  return basis;  // pool is lex sorted already
}

AffineMonoid::AffineMonoid(std::vector<IntVec> generators, Eigen::Index ambient_dim, Saturation saturated)
    : ambient_dim_(ambient_dim), saturated_(saturated) {
  for (const IntVec& g : generators) {
    if (g.size() != ambient_dim) throw InvalidArgument("AffineMonoid: generator dimension mismatch");
    for (Eigen::Index i = 0; i < g.size(); ++i) {
      if (g(i) < 0) throw InvalidArgument("AffineMonoid: generator outside N^n: " + vec_to_string(g));
    }
  }
  std::erase_if(generators, [](const IntVec& g) { return g.isZero(); });
  std::sort(generators.begin(), generators.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  generators.erase(
      std::unique(generators.begin(), generators.end(), [](const IntVec& a, const IntVec& b) { return a == b; }),
      generators.end());
  generators_ = std::move(generators);
}

RationalCone AffineMonoid::real_cone() const { return RationalCone(generators_, ambient_dim_); }

bool AffineMonoid::contains(const IntVec& x) const {
  if (x.size() != ambient_dim_) return false;
  std::map<IntVec, bool, LexCmp> memo;
  auto rec = [&](auto&& self, const IntVec& v) -> bool {
    if (v.isZero()) return true;
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const IntVec& g : generators_) {
      bool fits = true;
      for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) < g(i)) { fits = false; break; }
      }
      if (fits && self(self, IntVec(v - g))) { ok = true; break; }
    }
    memo.emplace(v, ok);
    return ok;
  };
  return rec(rec, x);
}

bool AffineMonoid::operator==(const AffineMonoid& other) const {
  if (ambient_dim_ != other.ambient_dim_ || generators_.size() != other.generators_.size()) return false;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] != other.generators_[i]) return false;
  }
  return true;
}

AffineMonoid saturate(const AffineMonoid& m) {
  return AffineMonoid(hilbert_basis(m.real_cone()), m.ambient_dim(), Saturation::Yes);
}

AffineMonoid truncate(const AffineMonoid& m, const Int& kappa) {
  if (kappa <= 0) throw InvalidArgument("truncate: kappa must be positive");
  if (kappa == 1) return m;
  std::vector<IntVec> gens;
  gens.reserve(m.generators().size());
  for (const IntVec& g : m.generators()) gens.push_back(IntVec(kappa * g));
  Saturation flag = m.generators().empty() ? m.saturated_flag() : Saturation::Unknown;
  return AffineMonoid(std::move(gens), m.ambient_dim(), flag);
}

AffineMonoid truncate(const AffineMonoid& m, const std::vector<Int>& kappas) {
  if (kappas.size() != m.generators().size()) {
    throw InvalidArgument("truncate: one multiplier per generator required");
  }
  std::vector<IntVec> gens;
  bool identity = true;
  for (std::size_t i = 0; i < kappas.size(); ++i) {
    if (kappas[i] <= 0) throw InvalidArgument("truncate: kappa must be positive");
    if (kappas[i] != 1) identity = false;
    gens.push_back(IntVec(kappas[i] * m.generators()[i]));
  }
  return AffineMonoid(std::move(gens), m.ambient_dim(), identity ? m.saturated_flag() : Saturation::Unknown);
}

AffineMonoid monoid_preimage(const IntMat& lambda, const RationalCone& target_cone, const AffineMonoid& m) {
  if (lambda.cols() != m.ambient_dim() || lambda.rows() != target_cone.ambient_dim()) {
    throw InvalidArgument("monoid_preimage: dimension mismatch");
  }
  if (m.saturated_flag() == Saturation::No) throw InvalidArgument("monoid_preimage: M must be saturated");
  if (m.saturated_flag() == Saturation::Unknown && !(saturate(m) == m)) {
    throw InvalidArgument("monoid_preimage: M must be saturated");
  }

  RationalCone source = m.real_cone();
  RatMat lam(lambda.rows(), lambda.cols());
  for (Eigen::Index i = 0; i < lambda.rows(); ++i)
    for (Eigen::Index j = 0; j < lambda.cols(); ++j) lam(i, j) = Rat(lambda(i, j));

  // Surjectivity onto the target cone: each target generator must have a
  // preimage in M_R.
  for (const IntVec& t : target_cone.generators()) {
    const Eigen::Index k = static_cast<Eigen::Index>(m.generators().size());
    if (k == 0) throw InvalidArgument("monoid_preimage: not surjective");
    RatMat a(lambda.rows(), k);
    for (Eigen::Index j = 0; j < k; ++j) a.col(j) = lam * to_rat(m.generators()[static_cast<std::size_t>(j)]);
    std::vector<Relation> rel(static_cast<std::size_t>(lambda.rows()), Relation::Eq);
    RatVec c = RatVec::Zero(k);
    if (solve_lp(a, to_rat(t), rel, c, std::vector<bool>(static_cast<std::size_t>(k), true)).status !=
        LPStatus::Optimal) {
      throw InvalidArgument("monoid_preimage: not surjective");
    }
  }

  // H-rep of M_R (cap) lambda^{-1}(target cone), then its Hilbert basis.
  std::vector<IntVec> eqs = source.span_equations();
  std::vector<IntVec> ineqs = source.facet_normals();
  for (const IntVec& e : target_cone.span_equations()) {
    RatVec pulled = lam.transpose() * to_rat(e);
    if (!pulled.isZero()) eqs.push_back(primitive(pulled));
  }
  for (const IntVec& f : target_cone.facet_normals()) {
    RatVec pulled = lam.transpose() * to_rat(f);
    if (!pulled.isZero()) ineqs.push_back(primitive(pulled));
  }
  RationalCone pre = RationalCone::from_hrep(eqs, ineqs, m.ambient_dim());
  return AffineMonoid(hilbert_basis(pre), m.ambient_dim(), Saturation::Yes);
}

RatVec divisor_min(const RatVec& p, const RatVec& q) {
  if (p.size() != q.size()) throw InvalidArgument("divisor_min: component index sets differ");
  RatVec out(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) out(i) = std::min(p(i), q(i));
  return out;
}

}  // namespace conecalc
