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

#include <benchmark/benchmark.h>

#include "conecalc/monoid.hpp"

namespace {

using namespace conecalc;

void BM_HilbertBasis2D(benchmark::State& state) {
  const long q = state.range(0);
  IntVec a(2), b(2);
  a << 1, 0;
  b << Int(q - 1), Int(q);
  RationalCone cone({a, b}, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbert_basis(cone));
  }
}
BENCHMARK(BM_HilbertBasis2D)->Arg(5)->Arg(10)->Arg(20);

void BM_HilbertBasis3D(benchmark::State& state) {
  IntVec a(3), b(3), c(3);
  a << 1, 0, 0;
  b << 1, Int(state.range(0)), 0;
  c << 1, 1, Int(state.range(0));
  RationalCone cone({a, b, c}, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbert_basis(cone));
  }
}
BENCHMARK(BM_HilbertBasis3D)->Arg(3)->Arg(6);

void BM_Saturate(benchmark::State& state) {
  IntVec a(2), b(2), c(2);
  a << 2, 0;
  b << 0, 3;
  c << 5, 7;
  AffineMonoid m({a, b, c}, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(saturate(m));
  }
}
BENCHMARK(BM_Saturate);

}  // namespace
