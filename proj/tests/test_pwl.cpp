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

#include <doctest.h>

#include "conecalc/toric.hpp"

using namespace conecalc;

namespace {

IntVec ivec(std::initializer_list<int> v) {
  IntVec out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (int x : v) out(i++) = Int(x);
  return out;
}

RatVec rvec(std::initializer_list<int> v) {
  RatVec out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (int x : v) out(i++) = Rat(x);
  return out;
}

// f(k) = k * d on N: additive everywhere.
RayOracle linear_oracle(const RatVec& d) {
  RayOracle f;
  f.domain = AffineMonoid({ivec({1})}, 1, Saturation::Yes);
  f.value_dim = d.size();
  f.evaluate = [d](const IntVec& s) { return RatVec(Rat(s(0)) * d); };
  f.stabilization = [](const IntVec&) { return Int(1); };
  return f;
}

// f(k) = floor(k/2) * d on N: additive on 2N.
RayOracle floor_oracle(const RatVec& d) {
  RayOracle f;
  f.domain = AffineMonoid({ivec({1})}, 1, Saturation::Yes);
  f.value_dim = d.size();
  f.evaluate = [d](const IntVec& s) { return RatVec(Rat(floor_div(s(0), Int(2))) * d); };
  f.stabilization = [](const IntVec&) { return Int(2); };
  return f;
}

ToricVariety f2() {
  return ToricVariety({ivec({1, 0}), ivec({0, 1}), ivec({-1, 2}), ivec({0, -1})},
                      {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

}  // namespace

TEST_CASE("straighten an additive oracle") {
  RayOracle f = linear_oracle(rvec({2, 3}));
  StraightenResult res = straighten(f, {ivec({1}), ivec({3})});
  CHECK(res.values[0] == rvec({2, 3}));
  CHECK(res.values[1] == rvec({6, 9}));
}

TEST_CASE("straighten the floor oracle") {
  RayOracle f = floor_oracle(rvec({4}));
  StraightenResult res = straighten(f, {ivec({1})});
  RatVec expected(1);
  expected(0) = Rat(2);  // (1/2) * 4
  CHECK(res.values[0] == expected);
  // f(iota * s) = f_sharp(iota * s) at the stabilizer multiple.
  CHECK(f.evaluate(ivec({2})) == RatVec(Rat(2) * res.values[0]));
}

TEST_CASE("straighten detects violated stabilization") {
  RayOracle f;
  f.domain = AffineMonoid({ivec({1})}, 1, Saturation::Yes);
  f.value_dim = 1;
  f.evaluate = [](const IntVec& s) {
    RatVec v(1);
    v(0) = Rat(s(0) * s(0));  // superadditive but never additive on a ray
    return v;
  };
  f.stabilization = [](const IntVec&) { return Int(2); };
  CHECK_THROWS_WITH_AS(straighten(f, {ivec({1})}), "stabilization violated at (1)", InvalidArgument);
}

TEST_CASE("straighten requires f(0) = 0") {
  RayOracle f = linear_oracle(rvec({1}));
  f.evaluate = [](const IntVec& s) {
    RatVec v(1);
    v(0) = Rat(s(0) + 1);
    return v;
  };
  CHECK_THROWS_AS(straighten(f, {ivec({1})}), InvalidArgument);
}

TEST_CASE("F2 Mob oracle straightens to the asymptotic correction") {
  ToricVariety x = f2();
  TDivisor sum;
  sum.coeffs = x.ray_divisor(0).coeffs + x.ray_divisor(1).coeffs;
  RayOracle f = toric_mob_oracle(x, {sum});

  // Lattice-point oracle for Fix at k = 1..8: mult_rho2 Fix|k(D1+D2)| =
  // ceil(k/2), so Mob = (k, floor(k/2), 0, 0).
  for (int k = 1; k <= 8; ++k) {
    RatVec got = f.evaluate(ivec({k}));
    CHECK(got == RatVec(rvec({k, k / 2, 0, 0})));
  }

  CHECK(f.stabilization(ivec({1})) == 2);
  StraightenResult res = straighten(f, {ivec({1})});
  RatVec expected(4);
  expected << Rat(1), Rat(1, 2), Rat(0), Rat(0);  // (D1 + D2) - (1/2) D2
  CHECK(res.values[0] == expected);

  // Eq-style consistency: f_sharp(1) = mu(1) - sum ord_rho * e_rho.
  RatVec indep = sum.coeffs;
  for (int r = 0; r < 4; ++r) indep(r) -= asymptotic_ord(x, r, sum).value;
  CHECK(res.values[0] == indep);
}

TEST_CASE("straightened values are positively homogeneous and unique") {
  ToricVariety x = f2();
  TDivisor sum;
  sum.coeffs = x.ray_divisor(0).coeffs + x.ray_divisor(1).coeffs;
  RayOracle f = toric_mob_oracle(x, {sum});
  StraightenResult base = straighten(f, {ivec({1})});
  for (int q = 2; q <= 5; ++q) {
    StraightenResult scaled = straighten(f, {ivec({q})});
    CHECK(scaled.values[0] == RatVec(Rat(q) * base.values[0]));
  }

  // Two stabilization certificates give the same straightened value.
  RayOracle doubled = f;
  doubled.stabilization = [](const IntVec&) { return Int(4); };
  CHECK(straighten(doubled, {ivec({1})}).values[0] == base.values[0]);
}

TEST_CASE("straightened values stay superadditive on samples") {
  ToricVariety x = f2();
  RayOracle f = toric_mob_oracle(x, {x.ray_divisor(0), x.ray_divisor(1)});
  auto sharp = [&](const IntVec& s) { return straighten(f, {s}).values[0]; };
  std::vector<IntVec> pts{ivec({1, 0}), ivec({0, 1}), ivec({1, 1}), ivec({2, 1}), ivec({1, 2})};
  for (const IntVec& a : pts) {
    for (const IntVec& b : pts) {
      RatVec lhs = sharp(a) + sharp(b);
      RatVec rhs = sharp(IntVec(a + b));
      for (Eigen::Index i = 0; i < lhs.size(); ++i) CHECK(lhs(i) <= rhs(i));
    }
  }
}

TEST_CASE("additivity check: p = 1 for an additive map") {
  RayOracle f = linear_oracle(rvec({1, 2}));
  TruncationCheck check = check_additivity_up_to_truncation(f, RationalCone({ivec({1})}, 1), Int(4));
  CHECK(check.kind == TruncationCheck::Kind::Certified);
  CHECK(check.p == 1);
}

TEST_CASE("additivity check: p = 2 on the F2 ray") {
  ToricVariety x = f2();
  RayOracle f = toric_mob_oracle(x, {x.ray_divisor(0), x.ray_divisor(1)});
  RationalCone ray({ivec({1, 1})}, 2);
  TruncationCheck check = check_additivity_up_to_truncation(f, ray, Int(6));
  CHECK(check.kind == TruncationCheck::Kind::Certified);
  CHECK(check.p == 2);
}

TEST_CASE("additivity check: counterexample for a capped map") {
  RayOracle f;
  f.domain = AffineMonoid({ivec({1})}, 1, Saturation::Yes);
  f.value_dim = 1;
  f.evaluate = [](const IntVec& s) {
    RatVec v(1);
    v(0) = std::min(Rat(s(0)), Rat(2));  // concave cap breaks superadditivity
    return v;
  };
  f.stabilization = [](const IntVec&) { return Int(1); };
  TruncationCheck check = check_additivity_up_to_truncation(f, RationalCone({ivec({1})}, 1), Int(2), 4);
  CHECK(check.kind == TruncationCheck::Kind::Counterexample);
  CHECK(check.violation.has_value());
}

TEST_CASE("additivity check: inconclusive when p_max is too small") {
  // f(k) = floor(3k/4): additive exactly on 4N, and the deviation is
  // visible inside the sampling window, so p_max = 3 cannot certify.
  RayOracle f;
  f.domain = AffineMonoid({ivec({1})}, 1, Saturation::Yes);
  f.value_dim = 1;
  f.evaluate = [](const IntVec& s) {
    RatVec v(1);
    v(0) = Rat(floor_div(3 * s(0), Int(4)));
    return v;
  };
  f.stabilization = [](const IntVec&) { return Int(4); };
  TruncationCheck check = check_additivity_up_to_truncation(f, RationalCone({ivec({1})}, 1), Int(3), 4);
  CHECK(check.kind == TruncationCheck::Kind::Inconclusive);

  // With p_max = 4 the same oracle certifies p = 4.
  TruncationCheck ok = check_additivity_up_to_truncation(f, RationalCone({ivec({1})}, 1), Int(4), 4);
  CHECK(ok.kind == TruncationCheck::Kind::Certified);
  CHECK(ok.p == 4);
}

TEST_CASE("verify_pwl confirms a linear map") {
  RayOracle f = linear_oracle(rvec({3}));
  PWLMap claim;
  claim.fan.support = RationalCone({ivec({1})}, 1);
  claim.fan.cones.push_back(claim.fan.support);
  RatMat piece(1, 1);
  piece(0, 0) = Rat(3);
  claim.pieces.push_back(piece);
  PWLVerdict v = verify_pwl(f, claim, 6, 0);
  CHECK(v.kind == PWLVerdict::Kind::Verified);
}

TEST_CASE("verify_pwl confirms the F2 chamber claim and flags a perturbation") {
  ToricVariety x = f2();
  std::vector<TDivisor> dirs{x.ray_divisor(0), x.ray_divisor(1)};
  ChamberDecomposition cd = chamber_decomposition(x, dirs);
  PWLMap claim = mob_claim_from_chambers(x, dirs, cd);
  RayOracle f = toric_mob_oracle(x, dirs);
  PWLVerdict ok = verify_pwl(f, claim, 8, 0);
  CHECK(ok.kind == PWLVerdict::Kind::Verified);

  PWLMap wrong = claim;
  wrong.pieces[1](0, 0) += Rat(1, 3);
  PWLVerdict bad = verify_pwl(f, wrong, 8, 0);
  CHECK(bad.kind == PWLVerdict::Kind::Counterexample);
  CHECK(bad.point.has_value());
}

TEST_CASE("verify_pwl propagates fan violations") {
  RayOracle f = linear_oracle(rvec({1}));
  PWLMap claim;
  claim.fan.support = RationalCone({ivec({1, 0}), ivec({0, 1})}, 2);
  claim.fan.cones.push_back(RationalCone({ivec({1, 0}), ivec({1, 1})}, 2));
  claim.fan.cones.push_back(RationalCone({ivec({2, 1}), ivec({0, 1})}, 2));
  claim.pieces.push_back(RatMat::Zero(1, 2));
  claim.pieces.push_back(RatMat::Zero(1, 2));
  PWLVerdict v = verify_pwl(f, claim, 4, 0);
  CHECK(v.kind == PWLVerdict::Kind::FanInvalid);
}

TEST_CASE("verify_pwl reports missing stabilization as inconclusive") {
  RayOracle f = linear_oracle(rvec({1}));
  f.stabilization = [](const IntVec&) { return Int(0); };
  PWLMap claim;
  claim.fan.support = RationalCone({ivec({1})}, 1);
  claim.fan.cones.push_back(claim.fan.support);
  claim.pieces.push_back(RatMat::Identity(1, 1));
  PWLVerdict v = verify_pwl(f, claim, 2, 0);
  CHECK(v.kind == PWLVerdict::Kind::Inconclusive);
}
