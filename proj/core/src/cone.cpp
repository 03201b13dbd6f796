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

#include "conecalc/cone.hpp"

#include <algorithm>

#include "conecalc/lp.hpp"

namespace conecalc {

namespace {

std::vector<IntVec> sorted_unique(std::vector<IntVec> vecs) {
  std::sort(vecs.begin(), vecs.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  vecs.erase(std::unique(vecs.begin(), vecs.end(), [](const IntVec& a, const IntVec& b) { return a == b; }),
             vecs.end());
  return vecs;
}

RatMat stack(const std::vector<IntVec>& rows, Eigen::Index cols) {
  RatMat m(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = to_rat(rows[i]).transpose();
  return m;
}

// x in cone(gens)? LP feasibility of sum мu_i g_i = x, mu >= 0.
bool in_generated_cone(const std::vector<IntVec>& gens, const RatVec& x) {
  const Eigen::Index n = x.size();
  if (gens.empty()) return x.isZero();
  RatMat a(n, static_cast<Eigen::Index>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j) a.col(static_cast<Eigen::Index>(j)) = to_rat(gens[j]);
  std::vector<Relation> rel(static_cast<std::size_t>(n), Relation::Eq);
  RatVec c = RatVec::Zero(a.cols());
  return solve_lp(a, x, rel, c, std::vector<bool>(gens.size(), true)).status == LPStatus::Optimal;
}

// Extreme rays of the full-dimensional pointed cone {y : f.y >= 0 for f in
// functionals} in R^q, by enumerating (q-1)-subsets of active functionals.
std::vector<IntVec> rays_of_pointed_hrep(const std::vector<RatVec>& functionals, Eigen::Index q) {
  std::vector<IntVec> rays;
  if (q == 0) return rays;
  if (q == 1) {
    // Pointed 1-dim cone: a single ray; orientation from the functionals.
    IntVec plus(1), minus(1);
    plus << 1;
    minus << -1;
    bool plus_ok = true, minus_ok = true;
    for (const RatVec& f : functionals) {
      if (f(0) < 0) plus_ok = false;
      if (f(0) > 0) minus_ok = false;
    }
    if (plus_ok) rays.push_back(plus);
    else if (minus_ok) rays.push_back(minus);
    return rays;
  }

  const std::size_t nf = functionals.size();
  std::vector<std::size_t> idx(q - 1);
  // Enumerate subsets of size q-1.
  std::vector<std::size_t> comb;
  auto process = [&](const std::vector<std::size_t>& subset) {
    RatMat m(static_cast<Eigen::Index>(subset.size()), q);
    for (std::size_t i = 0; i < subset.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = functionals[subset[i]].transpose();
    std::vector<RatVec> ker = kernel_basis(m);
    if (ker.size() != 1) return;
    IntVec v = primitive(ker[0]);
    bool pos = true, neg = true;
    for (const RatVec& f : functionals) {
      Rat s = f.dot(to_rat(v));
      if (s < 0) pos = false;
      if (s > 0) neg = false;
      if (!pos && !neg) return;
    }
    if (pos) rays.push_back(v);
    else if (neg) rays.push_back(IntVec(-v));
  };

  std::vector<std::size_t> subset(static_cast<std::size_t>(q - 1));
  auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (depth == subset.size()) {
      process(subset);
      return;
    }
    for (std::size_t i = start; i + (subset.size() - depth) <= nf; ++i) {
      subset[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  if (nf >= subset.size()) rec(rec, 0, 0);
  return sorted_unique(std::move(rays));
}

}  // namespace

RationalCone::RationalCone(std::vector<IntVec> generators, Eigen::Index ambient_dim) {
  ambient_dim_ = ambient_dim;
  for (IntVec& g : generators) {
    if (g.size() != ambient_dim) throw InvalidArgument("RationalCone: generator dimension mismatch");
    g = primitive(g);
  }
  std::erase_if(generators, [](const IntVec& g) { return g.isZero(); });
  generators_ = sorted_unique(std::move(generators));
  canonicalize();
}

RationalCone RationalCone::zero(Eigen::Index ambient_dim) { return RationalCone({}, ambient_dim); }

RationalCone RationalCone::full_space(Eigen::Index ambient_dim) {
  std::vector<IntVec> gens;
  for (Eigen::Index i = 0; i < ambient_dim; ++i) {
    IntVec e = IntVec::Zero(ambient_dim);
    e(i) = 1;
    gens.push_back(e);
    gens.push_back(IntVec(-e));
  }
  return RationalCone(std::move(gens), ambient_dim);
}

void RationalCone::canonicalize() {
  const Eigen::Index n = ambient_dim_;

  // Span and its equations.
  RatMat gmat = stack(generators_, n);
  std::vector<RatVec> eqs = kernel_basis(gmat);
  equations_.clear();
  for (const RatVec& e : eqs) equations_.push_back(primitive(e));
  equations_ = sorted_unique(std::move(equations_));
  span_dim_ = n - static_cast<Eigen::Index>(equations_.size());

  // Lineality: spanned by the generators whose negative stays in the cone.
  std::vector<IntVec> lin_gens;
  for (const IntVec& g : generators_) {
    if (in_generated_cone(generators_, RatVec(-to_rat(g)))) lin_gens.push_back(g);
  }
  RatMat lmat = stack(lin_gens, n);
  lineality_dim_ = lin_gens.empty() ? 0 : rank(lmat);

  // Facets, computed in coordinates for span/lineality. Build an invertible
  // matrix whose first columns are a lineality basis followed by a
  // completion to a span basis; the quotient map is the corresponding block
  // of the inverse.
  facets_.clear();
  const Eigen::Index q = span_dim_ - lineality_dim_;
  if (q > 0) {
    RatMat basis(n, n);
    Eigen::Index filled = 0;
    RatMat probe(n, 0);
    auto try_add = [&](const RatVec& v) {
      RatMat ext(n, filled + 1);
      if (filled > 0) ext.leftCols(filled) = basis.leftCols(filled);
      ext.col(filled) = v;
      if (rank(RatMat(ext.transpose())) == filled + 1) {
        basis.col(filled) = v;
        ++filled;
        return true;
      }
      return false;
    };
    for (const IntVec& g : lin_gens) {
      if (filled == lineality_dim_) break;
      try_add(to_rat(g));
    }
    for (const IntVec& g : generators_) {
      if (filled == span_dim_) break;
      try_add(to_rat(g));
    }
    for (Eigen::Index i = 0; i < n && filled < n; ++i) {
      RatVec e = RatVec::Zero(n);
      e(i) = 1;
      try_add(e);
    }
    RatMat inv = basis.inverse();
    RatMat qmap = inv.middleRows(lineality_dim_, q);  // quotient coordinates

    std::vector<IntVec> qgens;
    for (const IntVec& g : generators_) {
      IntVec y = primitive(RatVec(qmap * to_rat(g)));
      if (!y.isZero()) qgens.push_back(y);
    }
    qgens = sorted_unique(std::move(qgens));

    // Facets of the pointed quotient cone: spans of (q-1)-subsets of the
    // projected generators that support the cone on one side.
    std::vector<IntVec> qnormals;
    if (q == 1) {
      bool pos = false, neg = false;
      for (const IntVec& y : qgens) (y(0) > 0 ? pos : neg) = true;
      IntVec f(1);
      f << (pos ? 1 : -1);
      if (!(pos && neg)) qnormals.push_back(f);
    } else {
      std::vector<std::size_t> subset(static_cast<std::size_t>(q - 1));
      auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
        if (depth == subset.size()) {
          RatMat m(static_cast<Eigen::Index>(subset.size()), q);
          for (std::size_t i = 0; i < subset.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = to_rat(qgens[subset[i]]).transpose();
          std::vector<RatVec> ker = kernel_basis(m);
          if (ker.size() != 1) return;
          IntVec f = primitive(ker[0]);
          bool pos = true, neg = true;
          for (const IntVec& y : qgens) {
            Rat s = to_rat(f).dot(to_rat(y));
            if (s < 0) pos = false;
            if (s > 0) neg = false;
            if (!pos && !neg) return;
          }
          if (pos) qnormals.push_back(f);
          else if (neg) qnormals.push_back(IntVec(-f));
          return;
        }
        for (std::size_t i = start; i + (subset.size() - depth) <= qgens.size(); ++i) {
          subset[depth] = i;
          self(self, i + 1, depth + 1);
        }
      };
      if (qgens.size() >= subset.size()) rec(rec, 0, 0);
      qnormals = sorted_unique(std::move(qnormals));
    }
    for (const IntVec& f : qnormals) {
      RatVec ambient = qmap.transpose() * to_rat(f);
      facets_.push_back(primitive(ambient));
    }
    facets_ = sorted_unique(std::move(facets_));
  }

  // Canonical generators for pointed cones: the extreme rays, recognized by
  // active constraints of rank n-1.
  if (lineality_dim_ == 0 && !generators_.empty()) {
    std::vector<IntVec> extreme;
    for (const IntVec& g : generators_) {
      std::vector<IntVec> active = equations_;
      for (const IntVec& f : facets_) {
        if (to_rat(f).dot(to_rat(g)) == 0) active.push_back(f);
      }
      RatMat m = stack(active, n);
      if (rank(m) == n - 1) extreme.push_back(g);
    }
    generators_ = sorted_unique(std::move(extreme));
  }
}

RationalCone RationalCone::from_hrep(const std::vector<IntVec>& equations,
                                     const std::vector<IntVec>& inequalities, Eigen::Index ambient_dim) {
  std::vector<IntVec> eqs = equations, ineqs = inequalities;
  // Promote implicit equalities: f is one iff max f.x over the cone is 0.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
      const Eigen::Index rows = static_cast<Eigen::Index>(eqs.size() + ineqs.size()) + 1;
      RatMat a(rows, ambient_dim);
      RatVec b = RatVec::Zero(rows);
      std::vector<Relation> rel;
      Eigen::Index r = 0;
      for (const IntVec& e : eqs) {
        a.row(r++) = to_rat(e).transpose();
        rel.push_back(Relation::Eq);
      }
      for (const IntVec& f : ineqs) {
        a.row(r++) = to_rat(f).transpose();
        rel.push_back(Relation::Ge);
      }
      a.row(r) = to_rat(ineqs[i]).transpose();
      b(r) = 1;
      rel.push_back(Relation::Le);
      RatVec c = -to_rat(ineqs[i]);
      LPResult res = solve_lp(a, b, rel, c);
      if (res.status == LPStatus::Optimal && res.value == 0) {
        eqs.push_back(ineqs[i]);
        ineqs.erase(ineqs.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }

  // Subspace coordinates.
  std::vector<RatVec> sub = eqs.empty() ? std::vector<RatVec>() : kernel_basis(stack(eqs, ambient_dim));
  Eigen::Index s;
  RatMat bmat;
  if (eqs.empty()) {
    s = ambient_dim;
    bmat = RatMat::Identity(ambient_dim, ambient_dim);
  } else {
    s = static_cast<Eigen::Index>(sub.size());
    bmat = RatMat(ambient_dim, s);
    for (Eigen::Index j = 0; j < s; ++j) bmat.col(j) = sub[static_cast<std::size_t>(j)];
  }
  if (s == 0) return RationalCone::zero(ambient_dim);

  std::vector<RatVec> reduced;
  for (const IntVec& f : ineqs) {
    RatVec r = bmat.transpose() * to_rat(f);
    if (!r.isZero()) reduced.push_back(r);
  }

  // Lineality of the reduced cone.
  std::vector<RatVec> lin;
  if (reduced.empty()) {
    for (Eigen::Index j = 0; j < s; ++j) {
      RatVec e = RatVec::Zero(s);
      e(j) = 1;
      lin.push_back(e);
    }
  } else {
    RatMat m(static_cast<Eigen::Index>(reduced.size()), s);
    for (std::size_t i = 0; i < reduced.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = reduced[i].transpose();
    lin = kernel_basis(m);
  }
  const Eigen::Index l = static_cast<Eigen::Index>(lin.size());

  std::vector<IntVec> gens;
  for (const RatVec& v : lin) {
    gens.push_back(primitive(RatVec(bmat * v)));
    gens.push_back(primitive(RatVec(-(bmat * v))));
  }

  const Eigen::Index q = s - l;
  if (q > 0) {
    // Quotient out the lineality and enumerate extreme rays there.
    RatMat basis(s, s);
    Eigen::Index filled = 0;
    auto try_add = [&](const RatVec& v) {
      RatMat ext(s, filled + 1);
      if (filled > 0) ext.leftCols(filled) = basis.leftCols(filled);
      ext.col(filled) = v;
      if (rank(RatMat(ext.transpose())) == filled + 1) {
        basis.col(filled) = v;
        ++filled;
      }
    };
    for (const RatVec& v : lin) try_add(v);
    for (Eigen::Index i = 0; i < s && filled < s; ++i) {
      RatVec e = RatVec::Zero(s);
      e(i) = 1;
      try_add(e);
    }
    RatMat inv = basis.inverse();
    RatMat qmap = inv.middleRows(l, q);
    RatMat section = basis.middleCols(l, q);  // right inverse of qmap

    std::vector<RatVec> qfun;
    for (const RatVec& f : reduced) {
      RatVec g = section.transpose() * f;
      if (!g.isZero()) qfun.push_back(g);
    }
    for (const IntVec& ray : rays_of_pointed_hrep(qfun, q)) {
      RatVec y = section * to_rat(ray);
      gens.push_back(primitive(RatVec(bmat * y)));
    }
  }
  return RationalCone(std::move(gens), ambient_dim);
}

bool RationalCone::contains(const RatVec& x) const {
  if (x.size() != ambient_dim_) return false;
  for (const IntVec& e : equations_) {
    if (to_rat(e).dot(x) != 0) return false;
  }
  for (const IntVec& f : facets_) {
    if (to_rat(f).dot(x) < 0) return false;
  }
  return true;
}

bool RationalCone::relint_contains(const RatVec& x) const {
  if (x.size() != ambient_dim_) return false;
  if (x.isZero()) return true;
  for (const IntVec& e : equations_) {
    if (to_rat(e).dot(x) != 0) return false;
  }
  for (const IntVec& f : facets_) {
    if (to_rat(f).dot(x) <= 0) return false;
  }
  return true;
}

bool RationalCone::contains_cone(const RationalCone& other) const {
  for (const IntVec& g : other.generators_) {
    if (!contains(to_rat(g))) return false;
  }
  return true;
}

bool RationalCone::operator==(const RationalCone& other) const {
  return ambient_dim_ == other.ambient_dim_ && contains_cone(other) && other.contains_cone(*this);
}

RationalCone RationalCone::intersect(const RationalCone& other) const {
  if (ambient_dim_ != other.ambient_dim_) throw InvalidArgument("intersect: ambient dimension mismatch");
  std::vector<IntVec> eqs = equations_;
  eqs.insert(eqs.end(), other.equations_.begin(), other.equations_.end());
  std::vector<IntVec> ineqs = facets_;
  ineqs.insert(ineqs.end(), other.facets_.begin(), other.facets_.end());
  return from_hrep(eqs, ineqs, ambient_dim_);
}

RatVec RationalCone::relint_point() const {
  RatVec p = RatVec::Zero(ambient_dim_);
  for (const IntVec& g : generators_) p += to_rat(g);
  return p;
}

}  // namespace conecalc
