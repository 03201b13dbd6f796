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

#include "conecalc/toric.hpp"

namespace {

using namespace conecalc;

ToricVariety hirzebruch2() {
  IntVec r0(2), r1(2), r2(2), r3(2);
  r0 << 1, 0;
  r1 << 0, 1;
  r2 << -1, 2;
  r3 << 0, -1;
  return ToricVariety({r0, r1, r2, r3}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

void BM_AsymptoticOrd(benchmark::State& state) {
  ToricVariety x = hirzebruch2();
  TDivisor d;
  d.coeffs = RatVec(4);
  d.coeffs << Rat(state.range(0)), Rat(state.range(0)), Rat(0), Rat(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(asymptotic_ord(x, 1, d));
  }
}
BENCHMARK(BM_AsymptoticOrd)->Arg(1)->Arg(12);

void BM_ChamberDecomposition(benchmark::State& state) {
  ToricVariety x = hirzebruch2();
  std::vector<TDivisor> dirs{x.ray_divisor(0), x.ray_divisor(1)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(chamber_decomposition(x, dirs));
  }
}
BENCHMARK(BM_ChamberDecomposition);

void BM_DiminishedLocus(benchmark::State& state) {
  ToricVariety x = hirzebruch2();
  TDivisor d = x.ray_divisor(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(base_locus_div(x, d, BaseLocusMode::Diminished));
  }
}
BENCHMARK(BM_DiminishedLocus);

}  // namespace
