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

#include "conecalc/pwl.hpp"

#include <random>

namespace conecalc {

namespace {

// -1: strictly below somewhere and nowhere above (superadditivity broken
//     when it appears as f(x+y) vs f(x)+f(y));
//  0: equal; +1: somewhere strictly above.
int compare_vectors(const RatVec& lhs, const RatVec& rhs) {
  bool above = false, below = false;
  for (Eigen::Index i = 0; i < lhs.size(); ++i) {
    if (lhs(i) > rhs(i)) above = true;
    if (lhs(i) < rhs(i)) below = true;
  }
  if (below) return -1;
  if (above) return 1;
  return 0;
}

}  // namespace

StraightenResult straighten(const RayOracle& f, const std::vector<IntVec>& rays, int check_samples) {
  StraightenResult out;
  RatVec zero_value = f.evaluate(IntVec(IntVec::Zero(f.domain.ambient_dim())));
  if (!zero_value.isZero()) throw InvalidArgument("straighten: oracle has f(0) != 0");

  for (const IntVec& s : rays) {
    Int iota = f.stabilization(s);
    if (iota <= 0) throw InvalidArgument("straighten: missing stabilization data at " + vec_to_string(s));
    RatVec first = f.evaluate(IntVec(iota * s));
    for (int m = 1; m <= check_samples; ++m) {
      RatVec lo = f.evaluate(IntVec(iota * Int(m) * s));
      RatVec hi = f.evaluate(IntVec(iota * Int(m + 1) * s));
      if (RatVec(hi - lo) != first) {
        throw InvalidArgument("stabilization violated at " + vec_to_string(s));
      }
    }
    out.rays.push_back(s);
    out.values.push_back(RatVec(first / Rat(iota)));
  }
  return out;
}

TruncationCheck check_additivity_up_to_truncation(const RayOracle& f, const RationalCone& cone,
                                                  const Int& p_max, int i_max) {
  TruncationCheck out;
  RationalCone domain_cone = f.domain.real_cone();
  for (const IntVec& g : cone.generators()) {
    if (!domain_cone.contains(to_rat(g))) {
      throw InvalidArgument("check_additivity: cone not contained in the oracle domain");
    }
  }
  std::vector<IntVec> basis = hilbert_basis(cone);
  out.sample_points = basis;
  if (basis.empty()) {
    out.kind = TruncationCheck::Kind::Certified;
    out.p = 1;
    return out;
  }

  for (Int p = 1; p <= p_max; ++p) {
    bool additive = true;
    for (const IntVec& h : basis) {
      RatVec base = f.evaluate(IntVec(p * h));
      for (int i = 2; i <= i_max && additive; ++i) {
        RatVec scaled = f.evaluate(IntVec(p * Int(i) * h));
        int cmp = compare_vectors(scaled, RatVec(Rat(i) * base));
        if (cmp < 0) {
          out.kind = TruncationCheck::Kind::Counterexample;
          out.violation = {IntVec(p * h), IntVec(p * Int(i - 1) * h)};
          out.detail = "superadditivity violated along " + vec_to_string(h);
          return out;
        }
        if (cmp > 0) additive = false;
      }
      if (!additive) break;
    }
    for (std::size_t a = 0; a < basis.size() && additive; ++a) {
      for (std::size_t b = a; b < basis.size() && additive; ++b) {
        RatVec fa = f.evaluate(IntVec(p * basis[a]));
        RatVec fb = f.evaluate(IntVec(p * basis[b]));
        RatVec fab = f.evaluate(IntVec(p * (basis[a] + basis[b])));
        int cmp = compare_vectors(fab, RatVec(fa + fb));
        if (cmp < 0) {
          out.kind = TruncationCheck::Kind::Counterexample;
          out.violation = {IntVec(p * basis[a]), IntVec(p * basis[b])};
          out.detail = "superadditivity violated on a pair";
          return out;
        }
        if (cmp > 0) additive = false;
      }
    }
    if (additive) {
      out.kind = TruncationCheck::Kind::Certified;
      out.p = p;
      return out;
    }
  }
  out.kind = TruncationCheck::Kind::Inconclusive;
  out.detail = "no truncation certificate up to p_max";
  return out;
}

PWLVerdict verify_pwl(const RayOracle& f, const PWLMap& claim, int budget, std::uint64_t seed) {
  PWLVerdict out;
  FanVerdict fv = verify_fan(claim.fan);
  if (!fv.ok) {
    out.kind = PWLVerdict::Kind::FanInvalid;
    out.detail = fv.violation;
    return out;
  }
  if (claim.pieces.size() != claim.fan.cones.size()) {
    out.kind = PWLVerdict::Kind::FanInvalid;
    out.detail = "piece count does not match cone count";
    return out;
  }

  // Adjacent pieces must agree on shared faces.
  for (std::size_t i = 0; i < claim.fan.cones.size(); ++i) {
    for (std::size_t j = i + 1; j < claim.fan.cones.size(); ++j) {
      RationalCone meet = claim.fan.cones[i].intersect(claim.fan.cones[j]);
      for (const IntVec& g : meet.generators()) {
        if (RatVec(claim.pieces[i] * to_rat(g)) != RatVec(claim.pieces[j] * to_rat(g))) {
          out.kind = PWLVerdict::Kind::Counterexample;
          out.detail = "claim pieces disagree on a shared face";
          out.cone_index = i;
          out.point = g;
          return out;
        }
      }
    }
  }

  for (std::size_t ci = 0; ci < claim.fan.cones.size(); ++ci) {
    std::vector<IntVec> points = hilbert_basis(claim.fan.cones[ci]);
    std::mt19937_64 rng(seed + ci);
    const std::vector<IntVec> basis = points;
    for (int b = 0; b < budget && !basis.empty(); ++b) {
      IntVec s = IntVec::Zero(claim.fan.cones[ci].ambient_dim());
      std::uniform_int_distribution<int> coeff(0, 4);
      for (const IntVec& h : basis) s += Int(coeff(rng)) * h;
      if (!s.isZero()) points.push_back(s);
    }
    for (const IntVec& s : points) {
      Int iota = f.stabilization(s);
      if (iota <= 0) {
        out.kind = PWLVerdict::Kind::Inconclusive;
        out.detail = "missing stabilization data";
        out.cone_index = ci;
        out.point = s;
        return out;
      }
      StraightenResult sharp = straighten(f, {s});
      RatVec expected = sharp.values[0];
      RatVec actual = claim.pieces[ci] * to_rat(s);
      if (expected != actual) {
        out.kind = PWLVerdict::Kind::Counterexample;
        out.detail = "straightened oracle disagrees with the claimed piece";
        out.cone_index = ci;
        out.point = s;
        out.expected = expected;
        out.actual = actual;
        return out;
      }
    }
  }
  out.kind = PWLVerdict::Kind::Verified;
  return out;
}

}  // namespace conecalc
