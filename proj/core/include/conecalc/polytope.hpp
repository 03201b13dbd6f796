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

#ifndef CONECALC_POLYTOPE_HPP
#define CONECALC_POLYTOPE_HPP

#include <vector>

#include "conecalc/cone.hpp"
#include "conecalc/rational.hpp"

namespace conecalc {

/// A rational polytope stored by its vertices (minimal, sorted). The facet
/// description is derived exactly at construction via the homogenization
/// cone, so membership and lattice-point queries are pure lookups.
class RationalPolytope {
 public:
  /// Convex hull of the given points; non-extreme points are dropped.
  explicit RationalPolytope(std::vector<RatVec> points);

  static RationalPolytope empty(Eigen::Index ambient_dim);

  /// Bounded solution set of ineq.(1,x) >= 0 / eq.(1,x) = 0, i.e. rows are
  /// (b, a) meaning b + a.x >= 0 (resp. = 0). Throws on unbounded input.
  static RationalPolytope from_hrep(const std::vector<RatVec>& inequalities,
                                    const std::vector<RatVec>& equations, Eigen::Index ambient_dim);

  const std::vector<RatVec>& vertices() const { return vertices_; }
  bool is_empty() const { return vertices_.empty(); }
  Eigen::Index ambient_dim() const { return ambient_dim_; }
  /// Dimension of the affine hull; -1 for the empty polytope.
  Eigen::Index dim() const;

  /// Facet rows (b, a) with b + a.x >= 0 on the polytope, plus affine-hull
  /// equation rows (b, a) with b + a.x = 0.
  const std::vector<RatVec>& facets() const { return facets_; }
  const std::vector<RatVec>& hull_equations() const { return equations_; }

  bool contains(const RatVec& x) const;
  std::vector<IntVec> lattice_points() const;

  bool operator==(const RationalPolytope& other) const;

 private:
  std::vector<RatVec> vertices_;
  std::vector<RatVec> facets_;
  std::vector<RatVec> equations_;
  Eigen::Index ambient_dim_ = 0;
};

/// The cone of all nonnegative multiples of points of B.
RationalCone cone_over_polytope(const RationalPolytope& b);

}  // namespace conecalc

#endif  // CONECALC_POLYTOPE_HPP
