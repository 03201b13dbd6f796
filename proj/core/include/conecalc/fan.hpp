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

#ifndef CONECALC_FAN_HPP
#define CONECALC_FAN_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conecalc/cone.hpp"

namespace conecalc {

/// A finite collection of cones intended to subdivide a support cone.
struct Fan {
  std::vector<RationalCone> cones;
  RationalCone support = RationalCone::zero(0);
};

struct FanVerdict {
  bool ok = false;
  std::string violation;                              // empty when ok
  std::optional<RatVec> witness_point;                // uncovered / overlap point
  std::optional<std::pair<std::size_t, std::size_t>> witness_cones;
};

/// Checks that the cones pairwise intersect in common faces and that their
/// union covers the support. Failures come with a witness: a cone pair plus
/// a relative-interior point of a non-face intersection, or a point of the
/// support (verified exactly) lying in no cone.
FanVerdict verify_fan(const Fan& fan);

}  // namespace conecalc

#endif  // CONECALC_FAN_HPP
