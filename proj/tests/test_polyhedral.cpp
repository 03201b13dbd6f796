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

#include <random>

#include "conecalc/fan.hpp"
#include "conecalc/lattice.hpp"
#include "conecalc/monoid.hpp"
#include "conecalc/polytope.hpp"
#include "oracles.hpp"

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

RationalCone cone2(std::initializer_list<int> a, std::initializer_list<int> b) {
  return RationalCone({ivec(a), ivec(b)}, 2);
}

}  // namespace

TEST_CASE("cone canonical form keeps extreme rays only") {
  RationalCone c({ivec({2, 0}), ivec({0, 3}), ivec({1, 1})}, 2);
  REQUIRE(c.generators().size() == 2);
  CHECK(c.generators()[0] == ivec({0, 1}));
  CHECK(c.generators()[1] == ivec({1, 0}));
  CHECK(c.is_pointed());
  CHECK(c.dim() == 2);
}

TEST_CASE("cone membership and relint") {
  RationalCone quadrant = cone2({1, 0}, {0, 1});
  CHECK(quadrant.relint_contains(rvec({1, 1})));
  CHECK_FALSE(quadrant.relint_contains(rvec({1, 0})));
  CHECK(quadrant.contains(rvec({1, 0})));
  CHECK(quadrant.relint_contains(rvec({0, 0})));  // the origin is included

  RationalCone ray({ivec({1, 2})}, 2);
  CHECK(ray.relint_contains(rvec({2, 4})));
  CHECK_FALSE(ray.relint_contains(rvec({1, 1})));
  CHECK(ray.dim() == 1);
}

TEST_CASE("non-pointed cones are recognized") {
  RationalCone half({ivec({1, 0}), ivec({-1, 0}), ivec({0, 1})}, 2);
  CHECK_FALSE(half.is_pointed());
  CHECK(half.lineality_dim() == 1);
  CHECK(half.contains(rvec({-5, 0})));
  CHECK_FALSE(half.contains(rvec({0, -1})));
  CHECK(RationalCone::full_space(2).contains(rvec({-3, 7})));
  CHECK_THROWS_WITH_AS(hilbert_basis(half), "hilbert_basis: not pointed", InvalidArgument);
}

TEST_CASE("cone from_hrep round trip") {
  RationalCone c = cone2({1, 0}, {1, 3});
  RationalCone back = RationalCone::from_hrep(c.span_equations(), c.facet_normals(), 2);
  CHECK(back == c);
}

TEST_CASE("hilbert basis of unimodular cone") {
  auto basis = hilbert_basis(cone2({1, 0}, {0, 1}));
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == ivec({0, 1}));
  CHECK(basis[1] == ivec({1, 0}));
}

TEST_CASE("hilbert basis spec instances") {
  auto b2 = hilbert_basis(cone2({1, 0}, {1, 2}));
  REQUIRE(b2.size() == 3);
  CHECK(b2[0] == ivec({1, 0}));
  CHECK(b2[1] == ivec({1, 1}));
  CHECK(b2[2] == ivec({1, 2}));

  auto b3 = hilbert_basis(cone2({1, 0}, {1, 3}));
  REQUIRE(b3.size() == 4);
  CHECK(b3[0] == ivec({1, 0}));
  CHECK(b3[1] == ivec({1, 1}));
  CHECK(b3[2] == ivec({1, 2}));
  CHECK(b3[3] == ivec({1, 3}));
}

TEST_CASE("hilbert basis equals the brute-force oracle on small cones") {
  for (int p = 1; p <= 6; ++p) {
    for (int q = p; q <= 6; ++q) {
      auto expected = oracles::hilbert_oracle({ivec({1, 0}), ivec({p, q})});
      REQUIRE(expected.has_value());
      auto got = hilbert_basis(cone2({1, 0}, {p, q}));
      CHECK(got == *expected);
    }
  }
}

TEST_CASE("hilbert basis minimality per call") {
  auto basis = hilbert_basis(cone2({2, -1}, {1, 3}));
  RationalCone c = cone2({2, -1}, {1, 3});
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      IntVec diff = basis[i] - basis[j];
      bool zero = diff.isZero();
      if (!zero && i != j) {
        // No element is the sum of two basis elements.
        for (std::size_t k = 0; k < basis.size(); ++k) {
          CHECK_FALSE(basis[i] == IntVec(basis[j] + basis[k]));
        }
      }
    }
  }
  CHECK(!basis.empty());
  CHECK(c.is_pointed());
}

TEST_CASE("dimension guard rejects large cones unless overridden") {
  std::vector<IntVec> gens;
  for (int i = 0; i < 5; ++i) {
    IntVec e = IntVec::Zero(5);
    e(i) = 1;
    gens.push_back(e);
  }
  RationalCone c5(gens, 5);
  CHECK_THROWS_AS(hilbert_basis(c5), InvalidArgument);

  setenv("CONECALC_MAX_DIM", "5", 1);
  auto basis = hilbert_basis(c5);
  unsetenv("CONECALC_MAX_DIM");
  CHECK(basis.size() == 5);  // the unit vectors
}

TEST_CASE("zero and empty lattices behave") {
  IntLattice zero = hermite_basis({}, 2);
  CHECK(zero.rank() == 0);
  CHECK(zero.contains(ivec({0, 0})));
  CHECK_FALSE(zero.contains(ivec({1, 0})));
}

TEST_CASE("saturate spec instances") {
  AffineMonoid two({ivec({2})}, 1);
  CHECK(saturate(two).generators() == std::vector<IntVec>{ivec({1})});

  AffineMonoid numerical({ivec({2}), ivec({3})}, 1);
  CHECK(saturate(numerical).generators() == std::vector<IntVec>{ivec({1})});

  AffineMonoid diag({ivec({2, 0}), ivec({0, 2}), ivec({1, 1})}, 2);
  auto sat = saturate(diag);
  REQUIRE(sat.generators().size() == 2);
  CHECK(sat.generators()[0] == ivec({0, 1}));
  CHECK(sat.generators()[1] == ivec({1, 0}));
  CHECK(sat.saturated_flag() == Saturation::Yes);
}

TEST_CASE("saturate laws on random monoids") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> entry(0, 5);
  for (int trial = 0; trial < 40; ++trial) {
    int dim = 2 + static_cast<int>(rng() % 2);
    std::vector<IntVec> gens;
    for (int g = 0; g < 3; ++g) {
      IntVec v(dim);
      bool zero = true;
      for (int j = 0; j < dim; ++j) {
        v(j) = entry(rng);
        if (v(j) != 0) zero = false;
      }
      if (!zero) gens.push_back(v);
    }
    if (gens.empty()) continue;
    AffineMonoid m(gens, dim);
    AffineMonoid sat = saturate(m);
    // Extensive: generators of m lie in sat.
    for (const IntVec& g : m.generators()) CHECK(sat.contains(g));
    // Idempotent.
    CHECK(saturate(sat) == sat);
    // Saturated: sampled cone lattice points belong to sat.
    RationalCone cone = m.real_cone();
    for (const IntVec& g : m.generators()) {
      for (const IntVec& h : m.generators()) {
        IntVec probe = g + h;
        if (cone.contains(to_rat(probe))) CHECK(sat.contains(probe));
      }
    }
  }
}

TEST_CASE("truncate uniform and per-generator") {
  AffineMonoid m({ivec({1, 0}), ivec({0, 1})}, 2, Saturation::Yes);
  CHECK(truncate(m, Int(1)) == m);

  AffineMonoid t3 = truncate(m, Int(3));
  REQUIRE(t3.generators().size() == 2);
  CHECK(t3.generators()[0] == ivec({0, 3}));
  CHECK(t3.generators()[1] == ivec({3, 0}));

  AffineMonoid mixed({ivec({1, 0}), ivec({1, 1})}, 2);
  AffineMonoid t = truncate(mixed, std::vector<Int>{Int(2), Int(3)});
  REQUIRE(t.generators().size() == 2);
  CHECK(t.generators()[0] == ivec({2, 0}));
  CHECK(t.generators()[1] == ivec({3, 3}));
  CHECK_THROWS_AS(truncate(mixed, std::vector<Int>{Int(2)}), InvalidArgument);
}

TEST_CASE("uniform truncation is the set of kappa-multiples") {
  // x lies in S^(kappa) iff x = kappa*y with y in S, exhaustively on a box.
  AffineMonoid s({ivec({1, 0}), ivec({1, 1})}, 2, Saturation::Unknown);
  AffineMonoid t = truncate(s, Int(2));
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      IntVec x = ivec({a, b});
      bool in_trunc = t.contains(x);
      bool is_double = (a % 2 == 0) && (b % 2 == 0) && s.contains(ivec({a / 2, b / 2}));
      CHECK(in_trunc == is_double);
    }
  }
}

TEST_CASE("monoid_preimage spec instances") {
  AffineMonoid n2({ivec({1, 0}), ivec({0, 1})}, 2, Saturation::Yes);

  // Identity map, full target.
  IntMat id(2, 2);
  id << 1, 0, 0, 1;
  AffineMonoid pre = monoid_preimage(id, n2.real_cone(), n2);
  CHECK(pre == n2);

  // Sum map onto R_+.
  IntMat sum(1, 2);
  sum << 1, 1;
  RationalCone rplus({ivec({1})}, 1);
  AffineMonoid pre2 = monoid_preimage(sum, rplus, n2);
  CHECK(pre2 == n2);

  // Difference map, target {0}: the diagonal.
  IntMat diff(1, 2);
  diff << 1, -1;
  AffineMonoid pre3 = monoid_preimage(diff, RationalCone::zero(1), n2);
  REQUIRE(pre3.generators().size() == 1);
  CHECK(pre3.generators()[0] == ivec({1, 1}));
  CHECK(pre3.saturated_flag() == Saturation::Yes);

  // Non-surjective: negative ray unreachable from N^2 under the sum map.
  RationalCone rminus({ivec({-1})}, 1);
  CHECK_THROWS_WITH_AS(monoid_preimage(sum, rminus, n2), "monoid_preimage: not surjective", InvalidArgument);
}

TEST_CASE("monoid_preimage output is saturated") {
  AffineMonoid n2({ivec({1, 0}), ivec({0, 1})}, 2, Saturation::Yes);
  IntMat lambda(1, 2);
  lambda << 1, -2;
  AffineMonoid pre = monoid_preimage(lambda, RationalCone({ivec({1})}, 1), n2);
  RationalCone prc = pre.real_cone();
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 3; ++b) {
      IntVec x = ivec({a, b});
      if (a - 2 * b >= 0 && prc.contains(to_rat(x))) CHECK(pre.contains(x));
    }
  }
}

TEST_CASE("divisor_min componentwise") {
  RatVec p = rvec({3, 1, 2});
  RatVec q = rvec({1, 4, 2});
  CHECK(divisor_min(p, p) == p);
  CHECK(divisor_min(rvec({1, 0}), rvec({0, 2})) == rvec({0, 0}));
  CHECK(divisor_min(p, q) == rvec({1, 1, 2}));
  CHECK_THROWS_AS(divisor_min(p, rvec({1, 2})), InvalidArgument);

  // Complements have disjoint support.
  RatVec m = divisor_min(p, q);
  RatVec second = divisor_min(RatVec(p - m), RatVec(q - m));
  CHECK(second.isZero());
}

TEST_CASE("cone_over_polytope instances") {
  RationalCone ray = cone_over_polytope(RationalPolytope({rvec({1, 0})}));
  REQUIRE(ray.generators().size() == 1);
  CHECK(ray.generators()[0] == ivec({1, 0}));

  RationalCone quad = cone_over_polytope(RationalPolytope({rvec({1, 0}), rvec({0, 1})}));
  CHECK(quad == RationalCone({ivec({1, 0}), ivec({0, 1})}, 2));

  RationalCone narrow = cone_over_polytope(RationalPolytope({rvec({1, 1}), rvec({2, 1})}));
  REQUIRE(narrow.generators().size() == 2);
  CHECK(narrow.generators()[0] == ivec({1, 1}));
  CHECK(narrow.generators()[1] == ivec({2, 1}));

  CHECK_THROWS_AS(cone_over_polytope(RationalPolytope::empty(2)), InvalidArgument);
}

TEST_CASE("polytope basics") {
  RationalPolytope tri({rvec({0, 0}), rvec({1, 0}), rvec({0, 1}), rvec({0, 0})});
  CHECK(tri.vertices().size() == 3);
  CHECK(tri.dim() == 2);
  CHECK(tri.contains(RatVec(rvec({1, 1}) / Rat(4))));
  CHECK_FALSE(tri.contains(rvec({1, 1})));
  CHECK(tri.lattice_points().size() == 3);

  // Non-extreme point dropped.
  RationalPolytope seg({rvec({0, 0}), rvec({2, 2}), rvec({1, 1})});
  CHECK(seg.vertices().size() == 2);
  CHECK(seg.dim() == 1);

  RationalPolytope empty = RationalPolytope::empty(2);
  CHECK(empty.is_empty());
  CHECK(empty.dim() == -1);
  CHECK(empty.lattice_points().empty());
}

TEST_CASE("polytope from_hrep") {
  // Square [0,1]^2: rows (b, a) meaning b + a.x >= 0.
  std::vector<RatVec> rows{rvec({0, 1, 0}), rvec({0, 0, 1}), rvec({1, -1, 0}), rvec({1, 0, -1})};
  RationalPolytope square = RationalPolytope::from_hrep(rows, {}, 2);
  CHECK(square.vertices().size() == 4);
  CHECK(square.lattice_points().size() == 4);

  // Infeasible.
  std::vector<RatVec> bad{rvec({0, 1}), rvec({-1, -1})};
  CHECK(RationalPolytope::from_hrep(bad, {}, 1).is_empty());

  // Unbounded input rejected.
  std::vector<RatVec> open{rvec({0, 1, 0}), rvec({0, 0, 1})};
  CHECK_THROWS_AS(RationalPolytope::from_hrep(open, {}, 2), InvalidArgument);
}

TEST_CASE("verify_fan accepts a split quadrant") {
  Fan fan;
  fan.support = RationalCone({ivec({1, 0}), ivec({0, 1})}, 2);
  fan.cones.push_back(RationalCone({ivec({1, 0}), ivec({1, 1})}, 2));
  fan.cones.push_back(RationalCone({ivec({1, 1}), ivec({0, 1})}, 2));
  FanVerdict v = verify_fan(fan);
  CHECK(v.ok);
}

TEST_CASE("verify_fan catches overlap with an interior witness") {
  Fan fan;
  fan.support = RationalCone({ivec({1, 0}), ivec({0, 1})}, 2);
  fan.cones.push_back(RationalCone({ivec({1, 0}), ivec({1, 1})}, 2));
  fan.cones.push_back(RationalCone({ivec({2, 1}), ivec({0, 1})}, 2));
  FanVerdict v = verify_fan(fan);
  REQUIRE_FALSE(v.ok);
  REQUIRE(v.witness_point.has_value());
  // The witness lies in the interior of both cones' overlap.
  CHECK(fan.cones[0].contains(*v.witness_point));
  CHECK(fan.cones[1].contains(*v.witness_point));
  CHECK(v.witness_cones == std::make_pair(std::size_t{0}, std::size_t{1}));
}

TEST_CASE("verify_fan catches a coverage gap") {
  Fan fan;
  fan.support = RationalCone({ivec({1, 0}), ivec({0, 1})}, 2);
  fan.cones.push_back(RationalCone({ivec({1, 0}), ivec({1, 1})}, 2));
  FanVerdict v = verify_fan(fan);
  REQUIRE_FALSE(v.ok);
  REQUIRE(v.witness_point.has_value());
  CHECK(fan.support.contains(*v.witness_point));
  CHECK_FALSE(fan.cones[0].contains(*v.witness_point));
}

TEST_CASE("verify_fan rejects a cone outside the support") {
  Fan fan;
  fan.support = RationalCone({ivec({1, 0}), ivec({0, 1})}, 2);
  fan.cones.push_back(RationalCone({ivec({1, 0}), ivec({-1, 2})}, 2));
  FanVerdict v = verify_fan(fan);
  REQUIRE_FALSE(v.ok);
  CHECK(v.violation == "cone not contained in support");
}
