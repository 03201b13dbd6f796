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

#ifndef CONECALC_LINALG_HPP
#define CONECALC_LINALG_HPP

#include <optional>
#include <vector>

#include "conecalc/rational.hpp"

namespace conecalc {

/// Reduced row echelon form. Returns the pivot column of each nonzero row;
/// `m` is reduced in place and zero rows are moved to the bottom.
std::vector<Eigen::Index> rref_in_place(RatMat& m);

Eigen::Index rank(const RatMat& m);

struct AffineSolution {
  RatVec point;                 // one solution of A x = b
  std::vector<RatVec> kernel;   // canonical (RREF) basis of {v : A v = 0}
};

/// Exact solution of A x = b with kernel basis, or nullopt when inconsistent.
std::optional<AffineSolution> solve_affine(const RatMat& a, const RatVec& b);

/// Canonical kernel basis of A (RREF rows, leading entry 1).
std::vector<RatVec> kernel_basis(const RatMat& a);

/// An affine subspace base + span(directions) in canonical form: the
/// direction basis is in reduced row echelon form and the base point has
/// zero entries in the pivot coordinates, so equal subspaces compare equal
/// field by field.
class AffineSubspace {
 public:
  AffineSubspace(RatVec base, std::vector<RatVec> directions);

  static AffineSubspace point(RatVec base) { return AffineSubspace(std::move(base), {}); }

  const RatVec& base() const { return base_; }
  const std::vector<RatVec>& directions() const { return dirs_; }
  Eigen::Index ambient_dim() const { return base_.size(); }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(dirs_.size()); }

  bool contains(const RatVec& x) const;
  bool operator==(const AffineSubspace& other) const;

  /// Image under a rational linear map, re-canonicalized.
  AffineSubspace map(const RatMat& lambda) const;

 private:
  RatVec base_;
  std::vector<RatVec> dirs_;
};

/// Smallest affine subspace containing the given points; rejects empty input.
AffineSubspace affine_hull(const std::vector<RatVec>& points);

}  // namespace conecalc

#endif  // CONECALC_LINALG_HPP
