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

#ifndef CONECALC_DIOPH_HPP
#define CONECALC_DIOPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "conecalc/lattice.hpp"
#include "conecalc/linalg.hpp"
#include "conecalc/symbolic.hpp"

namespace conecalc {

/// Smallest rational affine subspace containing the point: base + the span
/// of the irrational directions. Minimality follows from the Q-linear
/// independence of {1, symbols}.
AffineSubspace smallest_rational_affine(const SymbolicPoint& x);

/// Minimal rational subspace of lambda(x); equals the image of the minimal
/// subspace of x under lambda.
AffineSubspace pushforward_subspace(const RatMat& lambda, const SymbolicPoint& x);

/// Structure of the closure of pi(N v + Lambda) in V/Lambda: a finite union
/// of translates of a rational subtorus V0/Lambda0.
struct ClosureStructure {
  std::vector<RatVec> subspace_basis;  // rational basis of V0, canonical
  std::vector<RatVec> cosets;          // component representatives mod Lambda, sorted
  bool dense = false;                  // V0 is the whole ambient space
  Int component_order = 1;             // number of connected components
};

ClosureStructure closure_structure(const SymbolicPoint& v, const IntLattice& lattice);

/// Membership of a rational point in lattice + span(subspace directions);
/// used to compare orbit-closure cosets modulo the subtorus.
bool in_lattice_plus_subspace(const RatVec& y, const IntLattice& lattice,
                              const std::vector<RatVec>& subspace_dirs);

/// An exactly certified strict inequality |quantity| < bound, witnessed by a
/// rational interval enclosure with hi < bound.
struct CertifiedBound {
  std::string label;
  Rat bound;
  Rat enclosure_lo;
  Rat enclosure_hi;
};

/// Output of the approximation constructions: rational points w_i with multipliers
/// k_i, exact positive weights with sum 1 and sum r_i w_i = x, certified
/// sup-norm bounds, and for the anchored variant the residual xi of the
/// two-anchor identity.
struct ApproxCertificate {
  std::vector<RatVec> points;
  std::vector<Int> multipliers;
  std::vector<SymbolicNumber> weights;
  std::optional<SymbolicPoint> residual;  // xi, with ||xi|| < eta/(k1+k2)
  std::optional<Int> anchor_sum;          // k1 + k2
  bool tail_in_minimal_subspace = false;  // w_3..w_m lie in W
  std::vector<CertifiedBound> bounds;
};

/// Rational simplex around x: points w_i of the minimal rational subspace W
/// with k | k_i, k_i w_i / k integral, ||x - w_i|| < eps/k_i, and an exact
/// convex identity x = sum r_i w_i with r_i > 0. In one irrational dimension
/// the accepted denominators are the continued-fraction records of the
/// coordinate.
ApproxCertificate approximate_simplex(const SymbolicPoint& x, const Int& k, const Rat& eps);

/// Anchored refinement: given w1 with ||x - w1|| < eps/k1 and k1 w1
/// integral, produces w2 (and a tail w_3.. inside W) with integral k_i w_i,
/// ||x - w_i|| < eps/k_i, the convex identity, and the two-anchor identity
/// x = (k1 w1 + k2 w2)/(k1+k2) + xi with ||xi|| < eta/(k1+k2). The k2 search
/// walks the component order of the orbit closure.
ApproxCertificate approximate_anchored(const SymbolicPoint& x, const Rat& eps, const Rat& eta,
                                       const RatVec& w1, const Int& k1);

}  // namespace conecalc

#endif  // CONECALC_DIOPH_HPP
