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

#ifndef CONECALC_LATTICE_HPP
#define CONECALC_LATTICE_HPP

#include <optional>
#include <vector>

#include "conecalc/linalg.hpp"
#include "conecalc/rational.hpp"

namespace conecalc {

/// A sublattice of Z^n stored as a row-style Hermite normal form basis:
/// pivot entries positive, entries above each pivot reduced into [0, pivot).
/// The HNF is canonical, so lattices compare equal structurally.
class IntLattice {
 public:
  /// Lattice generated by the given vectors (rows); empty list gives the
  /// zero lattice.
  static IntLattice from_generators(const std::vector<IntVec>& generators, Eigen::Index ambient_dim);

  const std::vector<IntVec>& basis() const { return basis_; }
  Eigen::Index ambient_dim() const { return ambient_dim_; }
  Eigen::Index rank() const { return static_cast<Eigen::Index>(basis_.size()); }

  bool contains(const IntVec& v) const;
  /// Coordinates of v in the HNF basis, or nullopt if v is not in the
  /// lattice (including v outside the spanned subspace).
  std::optional<IntVec> coordinates(const IntVec& v) const;

  bool operator==(const IntLattice& other) const;

 private:
  IntLattice(std::vector<IntVec> basis, Eigen::Index ambient_dim)
      : basis_(std::move(basis)), ambient_dim_(ambient_dim) {}
  std::vector<IntVec> basis_;
  Eigen::Index ambient_dim_ = 0;
};

/// HNF basis of the lattice spanned by the given integer vectors.
IntLattice hermite_basis(const std::vector<IntVec>& vectors, Eigen::Index ambient_dim);

/// Basis of {x in Z^m : M x = 0} (a saturated lattice), via column
/// reduction with a recorded unimodular transform.
std::vector<IntVec> integer_kernel(const IntMat& m);

/// Basis of the saturated lattice Z^n (cap) span_Q(subspace directions).
std::vector<IntVec> lattice_subspace_intersection(const std::vector<RatVec>& directions, Eigen::Index ambient_dim);

}  // namespace conecalc

#endif  // CONECALC_LATTICE_HPP
