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

#ifndef CONECALC_TORIC_HPP
#define CONECALC_TORIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "conecalc/fan.hpp"
#include "conecalc/polytope.hpp"
#include "conecalc/pwl.hpp"

namespace conecalc {

/// A divisor on a toric variety: one rational coefficient per fan ray.
struct TDivisor {
  RatVec coeffs;
  bool is_integral() const {
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
      if (denominator(coeffs(i)) != 1) return false;
    }
    return true;
  }
};

/// A complete simplicial toric variety of dimension <= 3, given by primitive
/// ray vectors and maximal cones as ray index lists. Completeness and the
/// fan axioms are verified exactly at construction.
class ToricVariety {
 public:
  ToricVariety(std::vector<IntVec> rays, std::vector<std::vector<int>> max_cones);

  Eigen::Index dim() const { return dim_; }
  std::size_t num_rays() const { return rays_.size(); }
  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<std::vector<int>>& max_cones() const { return max_cones_; }
  const Fan& fan() const { return fan_; }
  bool is_smooth() const { return smooth_; }

  /// A fixed integral ample divisor (smallest coefficients found by exact
  /// LP over the strict-convexity conditions); throws when the fan admits
  /// none (non-projective).
  const TDivisor& ample_divisor() const;

  TDivisor ray_divisor(int ray_index) const;
  TDivisor zero_divisor() const { return TDivisor{RatVec::Zero(static_cast<Eigen::Index>(rays_.size()))}; }

 private:
  std::vector<IntVec> rays_;
  std::vector<std::vector<int>> max_cones_;
  Fan fan_;
  Eigen::Index dim_ = 0;
  bool smooth_ = false;
  TDivisor ample_;
};

/// Section polytope P_D = {m : <m, v_rho> >= -a_rho}.
RationalPolytope divisor_polytope(const ToricVariety& x, const TDivisor& d);

/// Lattice-point count of P_D; rejects non-integral divisors.
Int h0(const ToricVariety& x, const TDivisor& d);

struct FixMob {
  TDivisor fix;
  TDivisor mob;
  std::vector<IntVec> witnesses;  // per ray: a lattice point attaining the minimum
};

/// Fixed and mobile parts of |D|: mult_rho Fix = min over lattice points of
/// <m, v_rho> + a_rho. Throws "empty linear system" when P_D has no lattice
/// point.
FixMob fix_mob(const ToricVariety& x, const TDivisor& d);

struct OrdValue {
  Rat value;
  RatVec witness;  // a rational point of P_D attaining the minimum
};

/// Asymptotic order of vanishing along the ray divisor: exact LP minimum of
/// <m, v_rho> + a_rho over the rational polytope P_D. Throws "kappa < 0"
/// when P_D is empty.
OrdValue asymptotic_ord(const ToricVariety& x, int ray_index, const TDivisor& d);

enum class BaseLocusMode { Stable, Diminished };

struct BaseLocus {
  std::vector<int> rays;  // divisorial components, ascending ray index
  bool all_of_x = false;  // |D|_R empty (stable) / D not pseudoeffective (diminished)
};

/// Divisorial part of the stable base locus B(D) (rays with positive
/// asymptotic order) or of the diminished base locus B_-(D) (rays whose
/// order stays positive in the limit over ample perturbations, computed by
/// an exact parametric limit rather than a numeric sweep).
BaseLocus base_locus_div(const ToricVariety& x, const TDivisor& d, BaseLocusMode mode);

/// lim_{eps -> 0+} ord_rho(D + eps A) computed exactly via optimal-basis
/// enumeration; nullopt when D + eps A has empty polytope for all small eps.
std::optional<Rat> asymptotic_ord_limit(const ToricVariety& x, int ray_index, const TDivisor& d,
                                        const TDivisor& ample);

/// A family of divisors base + sum t_i * direction_i over a rational
/// parameter polytope.
struct DivisorFamily {
  TDivisor base;
  std::vector<TDivisor> directions;
  RationalPolytope parameters;
};

TDivisor family_divisor(const ToricVariety& x, const DivisorFamily& family, const RatVec& t);

/// The rational polytope {t : ord_G(base + sum t_i directions_i) = 0},
/// computed as an exact projection of the incidence polytope in (t, m).
RationalPolytope not_in_base_locus_region(const ToricVariety& x, const DivisorFamily& family, int ray_index);

struct ChamberData {
  RationalCone cone = RationalCone::zero(0);  // chamber in the parameter space
  RatMat ord_matrix;   // rows indexed by fan rays: s -> ord_rho(sum s_i D_i)
  Int truncation = 1;  // least p with exact Mob homogeneity on the chamber generators
};

struct ChamberDecomposition {
  Fan fan;  // chambers + the parameter cone as support
  std::vector<ChamberData> chambers;
};

/// Subdivision of the parameter cone R_+^l (l <= 2 supported) into chambers
/// on which every ray order is linear, by optimal-basis enumeration of the
/// parametric LPs. Directions must have nonempty section polytopes.
ChamberDecomposition chamber_decomposition(const ToricVariety& x, const std::vector<TDivisor>& directions,
                                           int i_check = 6);

/// Mob claim (as a PWLMap piece set) derived from a chamber decomposition:
/// piece(s) = sum s_i a^i - ord_matrix * s per chamber.
PWLMap mob_claim_from_chambers(const ToricVariety& x, const std::vector<TDivisor>& directions,
                               const ChamberDecomposition& cd);

/// RayOracle evaluating s -> Mob(sum s_i D_i) coefficients with stabilizers
/// from LP witness denominators.
RayOracle toric_mob_oracle(const ToricVariety& x, const std::vector<TDivisor>& directions);

/// Hilbert basis of the multigraded section monoid
/// {(s, m) : <m, v_rho> + sum s_i a_rho^i >= 0, s >= 0}: the generator
/// degrees of the Cox ring of (D_1, ..., D_l) as a monomial algebra.
std::vector<std::pair<IntVec, IntVec>> multigraded_generators(const ToricVariety& x,
                                                              const std::vector<TDivisor>& divisors);

struct RestrictionData {
  Int dimension = 0;                              // h0(D) - h0(D - Gamma)
  std::vector<IntVec> basis_points;               // lattice points on the Gamma facet slab
  std::vector<std::pair<int, Rat>> restricted_ords;  // per adjacent ray: order at that boundary divisor
  bool image_zero = false;                        // Gamma inside Bs|D|
};

/// Restriction of |D| to the ray divisor Gamma: image dimension via the
/// kernel identity, monomial basis on the facet slab, and restricted
/// asymptotic orders at the boundary divisors (adjacent walls) by LP over
/// the slab polytope.
RestrictionData restrict_to_ray(const ToricVariety& x, int gamma_index, const TDivisor& d);

}  // namespace conecalc

#endif  // CONECALC_TORIC_HPP
