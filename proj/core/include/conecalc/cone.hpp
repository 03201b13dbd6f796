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

#ifndef CONECALC_CONE_HPP
#define CONECALC_CONE_HPP

#include <vector>

#include "conecalc/linalg.hpp"
#include "conecalc/rational.hpp"

namespace conecalc {

/// A rational polyhedral cone, all nonnegative combinations of finitely many
/// primitive integer generators. Both representations are computed exactly at
/// construction: for pointed cones the stored generator set is the set of
/// extreme rays sorted lexicographically, so equal cones are structurally
/// equal.
class RationalCone {
 public:
  RationalCone(std::vector<IntVec> generators, Eigen::Index ambient_dim);

  static RationalCone zero(Eigen::Index ambient_dim);
  static RationalCone full_space(Eigen::Index ambient_dim);
  /// Cone {x : eq.x = 0 for all equations, ineq.x >= 0 for all inequalities}.
  static RationalCone from_hrep(const std::vector<IntVec>& equations,
                                const std::vector<IntVec>& inequalities, Eigen::Index ambient_dim);

  const std::vector<IntVec>& generators() const { return generators_; }
  Eigen::Index ambient_dim() const { return ambient_dim_; }
  Eigen::Index dim() const { return span_dim_; }
  bool is_pointed() const { return lineality_dim_ == 0; }
  Eigen::Index lineality_dim() const { return lineality_dim_; }

  /// Primitive integer functionals f with f.x >= 0 on the cone, one per
  /// facet of the cone inside its span, sorted lexicographically.
  const std::vector<IntVec>& facet_normals() const { return facets_; }
  /// Primitive integer functionals vanishing on the span of the cone.
  const std::vector<IntVec>& span_equations() const { return equations_; }

  bool contains(const RatVec& x) const;
  bool contains(const IntVec& x) const { return contains(to_rat(x)); }
  /// True iff x = 0 or x lies in the topological interior of the cone within
  /// its linear span.
  bool relint_contains(const RatVec& x) const;

  bool contains_cone(const RationalCone& other) const;
  bool operator==(const RationalCone& other) const;

  RationalCone intersect(const RationalCone& other) const;

  /// A point in the relative interior (the origin for the zero cone).
  RatVec relint_point() const;

 private:
  RationalCone() = default;
  void canonicalize();

  std::vector<IntVec> generators_;
  Eigen::Index ambient_dim_ = 0;
  Eigen::Index span_dim_ = 0;
  Eigen::Index lineality_dim_ = 0;
  std::vector<IntVec> facets_;
  std::vector<IntVec> equations_;
};

}  // namespace conecalc

#endif  // CONECALC_CONE_HPP
