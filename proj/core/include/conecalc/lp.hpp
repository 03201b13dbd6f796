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

#ifndef CONECALC_LP_HPP
#define CONECALC_LP_HPP

#include <vector>

#include "conecalc/rational.hpp"

namespace conecalc {

enum class Relation { Eq, Ge, Le };

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rat value;   // optimal objective (when Optimal)
  RatVec x;    // an optimal basic solution (when Optimal)
};

/// Exact two-phase primal simplex with Bland's rule (no cycling).
/// Minimizes c.x subject to a_i.x (rel_i) b_i; variables are free unless
/// flagged nonnegative. All arithmetic rational.
LPResult solve_lp(const RatMat& a, const RatVec& b, const std::vector<Relation>& rel,
                  const RatVec& c, const std::vector<bool>& nonneg);

/// Convenience: all variables free.
LPResult solve_lp(const RatMat& a, const RatVec& b, const std::vector<Relation>& rel, const RatVec& c);

/// Feasibility of a_i.x (rel_i) b_i with free variables.
bool lp_feasible(const RatMat& a, const RatVec& b, const std::vector<Relation>& rel);

}  // namespace conecalc

#endif  // CONECALC_LP_HPP
