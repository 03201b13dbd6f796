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

#ifndef CONECALC_PWL_HPP
#define CONECALC_PWL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conecalc/fan.hpp"
#include "conecalc/monoid.hpp"

namespace conecalc {

/// A superadditive map on an affine monoid, given by an evaluation callable
/// (grading point to divisor-coefficient vector) plus per-point stabilizers:
/// stabilization(s) = iota with f additive on N*iota*s. A nonpositive
/// stabilizer means "no data" and turns dependent verdicts inconclusive.
/// Oracles must be pure: same input, same output.
struct RayOracle {
  AffineMonoid domain;
  Eigen::Index value_dim = 0;
  std::function<RatVec(const IntVec&)> evaluate;
  std::function<Int(const IntVec&)> stabilization;
};

/// f_sharp values at the requested rays: f_sharp(s) = f(iota_s s)/iota_s,
/// after checking that the sampled increments along the ray are constant.
/// Throws InvalidArgument("stabilization violated") otherwise.
struct StraightenResult {
  std::vector<IntVec> rays;
  std::vector<RatVec> values;
};
StraightenResult straighten(const RayOracle& f, const std::vector<IntVec>& rays, int check_samples = 4);

/// Outcome of the additivity-up-to-truncation search on a cone.
struct TruncationCheck {
  enum class Kind { Certified, Counterexample, Inconclusive };
  Kind kind = Kind::Inconclusive;
  Int p = 0;                          // least certified truncation (Certified)
  std::vector<IntVec> sample_points;  // Hilbert basis points exercised
  // Superadditivity violation witness (Counterexample):
  std::optional<std::pair<IntVec, IntVec>> violation;
  std::string detail;
};

/// Searches the least p <= p_max with f(i p h) = i f(p h) for i <= i_max and
/// f(p h1) + f(p h2) = f(p (h1+h2)) over the Hilbert basis of cone (cap) S.
/// A strict failure of superadditivity yields a counterexample; exhausting
/// p_max is the inconclusive verdict (a semi-decision, not an error).
TruncationCheck check_additivity_up_to_truncation(const RayOracle& f, const RationalCone& cone,
                                                  const Int& p_max, int i_max = 6);

/// A rationally piecewise linear claim: one linear matrix per fan cone,
/// mapping grading vectors to value vectors. Adjacent pieces must agree on
/// shared faces.
struct PWLMap {
  Fan fan;
  std::vector<RatMat> pieces;
};

struct PWLVerdict {
  enum class Kind { Verified, Counterexample, Inconclusive, FanInvalid };
  Kind kind = Kind::Inconclusive;
  std::string detail;
  std::optional<std::size_t> cone_index;
  std::optional<IntVec> point;
  std::optional<RatVec> expected;  // straightened oracle value
  std::optional<RatVec> actual;    // claimed linear value
};

/// Confirms f_sharp(s) = piece * s at every Hilbert basis point of every
/// cone plus `budget` seeded monoid samples per cone; returns the first
/// disagreement otherwise. Fan violations propagate as FanInvalid.
PWLVerdict verify_pwl(const RayOracle& f, const PWLMap& claim, int budget, std::uint64_t seed);

}  // namespace conecalc

#endif  // CONECALC_PWL_HPP
