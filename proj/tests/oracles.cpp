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

#include "oracles.hpp"

namespace conecalc::oracles {

namespace {

// Cramer solves in dim 1..3.
std::optional<RatVec> cramer(const std::vector<IntVec>& rows, const std::vector<Int>& rhs) {
  const Eigen::Index d = rows[0].size();
  if (d == 1) {
    if (rows[0](0) == 0) return std::nullopt;
    RatVec x(1);
    x(0) = Rat(rhs[0], rows[0](0));
    return x;
  }
  if (d == 2) {
    Int det = rows[0](0) * rows[1](1) - rows[0](1) * rows[1](0);
    if (det == 0) return std::nullopt;
    RatVec x(2);
    x(0) = Rat(rhs[0] * rows[1](1) - rows[0](1) * rhs[1], det);
    x(1) = Rat(rows[0](0) * rhs[1] - rhs[0] * rows[1](0), det);
    return x;
  }
  auto det3 = [](const IntVec& a, const IntVec& b, const IntVec& c) {
    return a(0) * (b(1) * c(2) - b(2) * c(1)) - a(1) * (b(0) * c(2) - b(2) * c(0)) +
           a(2) * (b(0) * c(1) - b(1) * c(0));
  };
  Int det = det3(rows[0], rows[1], rows[2]);
  if (det == 0) return std::nullopt;
  RatVec x(3);
  for (Eigen::Index col = 0; col < 3; ++col) {
    std::vector<IntVec> m = rows;
    for (int r = 0; r < 3; ++r) m[static_cast<std::size_t>(r)](col) = rhs[static_cast<std::size_t>(r)];
    x(col) = Rat(det3(m[0], m[1], m[2]), det);
  }
  return x;
}

Int rat_floor_local(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int r = n / d;
  if (n % d != 0 && n < 0) --r;
  return r;
}

}  // namespace

std::optional<std::vector<IntVec>> brute_box_points(const BruteCone& c, long max_points) {
  const Eigen::Index d = c.generators[0].size();
  // Vertices of {0 <= f.y <= M_f} from d-subsets of the bounding hyperplanes.
  std::vector<std::pair<IntVec, Int>> hyperplanes;
  for (std::size_t i = 0; i < c.facets.size(); ++i) {
    hyperplanes.push_back({c.facets[i], Int(0)});
    hyperplanes.push_back({c.facets[i], c.zonotope_bound[i]});
  }
  std::vector<RatVec> vertices;
  const std::size_t nh = hyperplanes.size();
  std::vector<std::size_t> idx(static_cast<std::size_t>(d));
  auto feasible = [&](const RatVec& y) {
    for (std::size_t i = 0; i < c.facets.size(); ++i) {
      Rat v = 0;
      for (Eigen::Index k = 0; k < d; ++k) v += Rat(c.facets[i](k)) * y(k);
      if (v < 0 || v > Rat(c.zonotope_bound[i])) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (depth == idx.size()) {
      std::vector<IntVec> rows;
      std::vector<Int> rhs;
      for (std::size_t i : idx) {
        rows.push_back(hyperplanes[i].first);
        rhs.push_back(hyperplanes[i].second);
      }
      auto y = cramer(rows, rhs);
      if (y && feasible(*y)) vertices.push_back(*y);
      return;
    }
    for (std::size_t i = start; i + (idx.size() - depth) <= nh; ++i) {
      idx[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  if (vertices.empty()) return std::vector<IntVec>{};

  std::vector<Int> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
  for (Eigen::Index k = 0; k < d; ++k) {
    Rat mn = vertices[0](k), mx = vertices[0](k);
    for (const RatVec& v : vertices) {
      mn = std::min(mn, v(k));
      mx = std::max(mx, v(k));
    }
    lo[static_cast<std::size_t>(k)] = rat_floor_local(mn);
    hi[static_cast<std::size_t>(k)] = -rat_floor_local(-mx);  // ceil
  }

  Int volume = 1;
  for (Eigen::Index k = 0; k < d; ++k) {
    volume *= hi[static_cast<std::size_t>(k)] - lo[static_cast<std::size_t>(k)] + 1;
    if (volume > max_points) return std::nullopt;
  }

  std::vector<IntVec> points;
  IntVec y(d);
  auto walk = [&](auto&& self, Eigen::Index k) -> void {
    if (k == d) {
      for (std::size_t i = 0; i < c.facets.size(); ++i) {
        Int v = dot(c.facets[i], y);
        if (v < 0 || v > c.zonotope_bound[i]) return;
      }
      points.push_back(y);
      return;
    }
    for (Int v = lo[static_cast<std::size_t>(k)]; v <= hi[static_cast<std::size_t>(k)]; ++v) {
      y(k) = v;
      self(self, k + 1);
    }
  };
  walk(walk, 0);
  std::sort(points.begin(), points.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  return points;
}

std::optional<std::vector<IntVec>> hilbert_oracle(const std::vector<IntVec>& gens, long max_points) {
  auto cone = brute_cone(gens);
  if (!cone) return std::nullopt;
  const Eigen::Index d = gens[0].size();
  if (!brute_pointed_full(*cone, d)) return std::nullopt;
  auto points = brute_box_points(*cone, max_points);
  if (!points) return std::nullopt;

  std::vector<IntVec> basis;
  for (const IntVec& x : *points) {
    bool zero = true;
    for (Eigen::Index k = 0; k < d; ++k) {
      if (x(k) != 0) zero = false;
    }
    if (zero) continue;
    bool reducible = false;
    for (const IntVec& y : *points) {
      if (y == x) continue;
      bool yzero = true;
      for (Eigen::Index k = 0; k < d; ++k) {
        if (y(k) != 0) yzero = false;
      }
      if (yzero) continue;
      if (in_cone(*cone, IntVec(x - y))) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  return basis;
}

}  // namespace conecalc::oracles
