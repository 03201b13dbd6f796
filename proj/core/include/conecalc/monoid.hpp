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

#ifndef CONECALC_MONOID_HPP
#define CONECALC_MONOID_HPP

#include <optional>
#include <vector>

#include "conecalc/cone.hpp"
#include "conecalc/rational.hpp"

namespace conecalc {

/// Minimal generating set of cone (cap) Z^n for a pointed rational cone:
/// candidates are enumerated from the fundamental parallelepipeds of
/// independent extreme-ray subsets, then reduced to the irreducible
/// elements. Output sorted lexicographically.
///
/// Dimensions above the guard (default 4, override with env CONECALC_MAX_DIM)
/// are rejected; throws "not pointed" for cones containing a line.
std::vector<IntVec> hilbert_basis(const RationalCone& cone);

enum class Saturation { Yes, No, Unknown };

/// A finitely generated submonoid of N^n, stored by its generators
/// (nonzero, sorted). Saturation state is tracked as a tri-state flag.
class AffineMonoid {
 public:
  AffineMonoid() = default;  // the zero monoid in N^0
  AffineMonoid(std::vector<IntVec> generators, Eigen::Index ambient_dim,
               Saturation saturated = Saturation::Unknown);

  const std::vector<IntVec>& generators() const { return generators_; }
  Eigen::Index ambient_dim() const { return ambient_dim_; }
  Saturation saturated_flag() const { return saturated_; }

  /// The real cone spanned by the generators.
  RationalCone real_cone() const;

  /// Exact membership x in the monoid (bounded search over N-combinations).
  bool contains(const IntVec& x) const;

  bool operator==(const AffineMonoid& other) const;

 private:
  std::vector<IntVec> generators_;
  Eigen::Index ambient_dim_ = 0;
  Saturation saturated_ = Saturation::Unknown;
};

/// Saturation: the monoid generated by the Hilbert basis of the real cone.
AffineMonoid saturate(const AffineMonoid& m);

/// Uniform truncation: the submonoid of kappa-fold multiples, independent of
/// the chosen generators.
AffineMonoid truncate(const AffineMonoid& m, const Int& kappa);
/// Per-generator truncation sum N kappa_i e_i for the stored generator list.
AffineMonoid truncate(const AffineMonoid& m, const std::vector<Int>& kappas);

/// Generators of M (cap) lambda^{-1}(target_cone) for a saturated monoid M
/// and an additive map lambda given by an integer matrix. The preimage of a
/// saturated finitely generated submonoid is again saturated and finitely
/// generated; throws "not surjective" when lambda(M_R) does not cover the
/// target cone.
AffineMonoid monoid_preimage(const IntMat& lambda, const RationalCone& target_cone, const AffineMonoid& m);

/// Componentwise minimum of two coefficient vectors over the same index set.
RatVec divisor_min(const RatVec& p, const RatVec& q);

}  // namespace conecalc

#endif  // CONECALC_MONOID_HPP
