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

#include "conecalc/polytope.hpp"

#include <algorithm>

#include "conecalc/lp.hpp"

namespace conecalc {

namespace {

bool in_convex_hull(const std::vector<RatVec>& points, const RatVec& x) {
  if (points.empty()) return false;
  const Eigen::Index n = x.size();
  RatMat a(n + 1, static_cast<Eigen::Index>(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    a.col(static_cast<Eigen::Index>(j)).head(n) = points[j];
    a(n, static_cast<Eigen::Index>(j)) = 1;
  }
  RatVec b(n + 1);
  b.head(n) = x;
  b(n) = 1;
  std::vector<Relation> rel(static_cast<std::size_t>(n + 1), Relation::Eq);
  RatVec c = RatVec::Zero(a.cols());
  return solve_lp(a, b, rel, c, std::vector<bool>(points.size(), true)).status == LPStatus::Optimal;
}

RatVec homogenize(const RatVec& x) {
  RatVec h(x.size() + 1);
  h(0) = 1;
  h.tail(x.size()) = x;
  return h;
}

}  // namespace

RationalPolytope::RationalPolytope(std::vector<RatVec> points) {
  if (!points.empty()) ambient_dim_ = points[0].size();
  for (const RatVec& p : points) {
    if (p.size() != ambient_dim_) throw InvalidArgument("RationalPolytope: dimension mismatch");
  }
  std::sort(points.begin(), points.end(), [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
  points.erase(std::unique(points.begin(), points.end(), [](const RatVec& a, const RatVec& b) { return a == b; }),
               points.end());

  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<RatVec> others;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j != i) others.push_back(points[j]);
    }
    if (!in_convex_hull(others, points[i])) vertices_.push_back(points[i]);
  }

  if (!vertices_.empty()) {
    std::vector<IntVec> gens;
    gens.reserve(vertices_.size());
    for (const RatVec& v : vertices_) gens.push_back(primitive(RatVec(homogenize(v))));
    RationalCone hom(std::move(gens), ambient_dim_ + 1);
    for (const IntVec& f : hom.facet_normals()) facets_.push_back(to_rat(f));
    for (const IntVec& e : hom.span_equations()) equations_.push_back(to_rat(e));
  }
}

RationalPolytope RationalPolytope::empty(Eigen::Index ambient_dim) {
  RationalPolytope p{std::vector<RatVec>{}};
  p.ambient_dim_ = ambient_dim;
  return p;
}

RationalPolytope RationalPolytope::from_hrep(const std::vector<RatVec>& inequalities,
                                             const std::vector<RatVec>& equations, Eigen::Index ambient_dim) {
  for (const RatVec& row : inequalities) {
    if (row.size() != ambient_dim + 1) throw InvalidArgument("from_hrep: row size mismatch");
  }
  for (const RatVec& row : equations) {
    if (row.size() != ambient_dim + 1) throw InvalidArgument("from_hrep: row size mismatch");
  }

  // Boundedness: the recession cone must be trivial.
  std::vector<IntVec> rec_eq, rec_ineq;
  for (const RatVec& row : equations) rec_eq.push_back(primitive(RatVec(row.tail(ambient_dim))));
  for (const RatVec& row : inequalities) rec_ineq.push_back(primitive(RatVec(row.tail(ambient_dim))));
  std::erase_if(rec_eq, [](const IntVec& v) { return v.isZero(); });
  std::erase_if(rec_ineq, [](const IntVec& v) { return v.isZero(); });
  if (RationalCone::from_hrep(rec_eq, rec_ineq, ambient_dim).dim() > 0) {
    throw InvalidArgument("from_hrep: unbounded polyhedron");
  }

  RatMat eq_lin(static_cast<Eigen::Index>(equations.size()), ambient_dim);
  for (std::size_t i = 0; i < equations.size(); ++i) eq_lin.row(static_cast<Eigen::Index>(i)) = equations[i].tail(ambient_dim).transpose();
  const Eigen::Index re = equations.empty() ? 0 : rank(eq_lin);
  const Eigen::Index need = ambient_dim - re;

  auto satisfies = [&](const RatVec& x) {
    for (const RatVec& row : equations) {
      if (row(0) + row.tail(ambient_dim).dot(x) != 0) return false;
    }
    for (const RatVec& row : inequalities) {
      if (row(0) + row.tail(ambient_dim).dot(x) < 0) return false;
    }
    return true;
  };

  std::vector<RatVec> candidates;
  std::vector<std::size_t> subset(static_cast<std::size_t>(need));
  auto solve_active = [&](const std::vector<std::size_t>& active) {
    const Eigen::Index rows = static_cast<Eigen::Index>(equations.size() + active.size());
    RatMat a(rows, ambient_dim);
    RatVec b(rows);
    Eigen::Index r = 0;
    for (const RatVec& row : equations) {
      a.row(r) = row.tail(ambient_dim).transpose();
      b(r++) = -row(0);
    }
    for (std::size_t idx : active) {
      a.row(r) = inequalities[idx].tail(ambient_dim).transpose();
      b(r++) = -inequalities[idx](0);
    }
    if (rank(a) != ambient_dim) return;
    auto sol = solve_affine(a, b);
    if (sol && satisfies(sol->point)) candidates.push_back(sol->point);
  };
  if (need == 0) {
    solve_active({});
  } else if (static_cast<Eigen::Index>(inequalities.size()) >= need) {
    auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
      if (depth == subset.size()) {
        solve_active(subset);
        return;
      }
      for (std::size_t i = start; i + (subset.size() - depth) <= inequalities.size(); ++i) {
        subset[depth] = i;
        self(self, i + 1, depth + 1);
      }
    };
    rec(rec, 0, 0);
  }
  if (candidates.empty()) return RationalPolytope::empty(ambient_dim);
  return RationalPolytope(std::move(candidates));
}

Eigen::Index RationalPolytope::dim() const {
  if (vertices_.empty()) return -1;
  return ambient_dim_ - static_cast<Eigen::Index>(equations_.size());
}

bool RationalPolytope::contains(const RatVec& x) const {
  if (vertices_.empty() || x.size() != ambient_dim_) return false;
  RatVec h = homogenize(x);
  for (const RatVec& e : equations_) {
    if (e.dot(h) != 0) return false;
  }
  for (const RatVec& f : facets_) {
    if (f.dot(h) < 0) return false;
  }
  return true;
}

std::vector<IntVec> RationalPolytope::lattice_points() const {
  std::vector<IntVec> out;
  if (vertices_.empty()) return out;
  std::vector<Int> lo(static_cast<std::size_t>(ambient_dim_)), hi(static_cast<std::size_t>(ambient_dim_));
  for (Eigen::Index j = 0; j < ambient_dim_; ++j) {
    Rat mn = vertices_[0](j), mx = vertices_[0](j);
    for (const RatVec& v : vertices_) {
      mn = std::min(mn, v(j));
      mx = std::max(mx, v(j));
    }
    lo[static_cast<std::size_t>(j)] = rat_ceil(mn);
    hi[static_cast<std::size_t>(j)] = rat_floor(mx);
  }
  IntVec current(ambient_dim_);
  auto rec = [&](auto&& self, Eigen::Index j) -> void {
    if (j == ambient_dim_) {
      if (contains(to_rat(current))) out.push_back(current);
      return;
    }
    for (Int v = lo[static_cast<std::size_t>(j)]; v <= hi[static_cast<std::size_t>(j)]; ++v) {
      current(j) = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  return out;
}

bool RationalPolytope::operator==(const RationalPolytope& other) const {
  if (ambient_dim_ != other.ambient_dim_ || vertices_.size() != other.vertices_.size()) return false;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] != other.vertices_[i]) return false;
  }
  return true;
}

RationalCone cone_over_polytope(const RationalPolytope& b) {
  if (b.is_empty()) throw InvalidArgument("cone_over_polytope: empty polytope");
  std::vector<IntVec> gens;
  for (const RatVec& v : b.vertices()) {
    IntVec g = primitive(v);
    if (!g.isZero()) gens.push_back(g);
  }
  return RationalCone(std::move(gens), b.ambient_dim());
}

}  // namespace conecalc
