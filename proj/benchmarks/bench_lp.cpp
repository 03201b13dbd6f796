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

#include <random>

#include "conecalc/lp.hpp"

namespace {

using namespace conecalc;

void BM_SimplexRandom(benchmark::State& state) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> entry(-5, 5);
  const int rows = static_cast<int>(state.range(0));
  RatMat a(rows + 4, 2);
  RatVec b(rows + 4);
  for (int i = 0; i < rows; ++i) {
    a(i, 0) = Rat(entry(rng));
    a(i, 1) = Rat(entry(rng));
    b(i) = Rat(entry(rng)) - Rat(8);
  }
  a.row(rows) << Rat(1), Rat(0);
  a.row(rows + 1) << Rat(-1), Rat(0);
  a.row(rows + 2) << Rat(0), Rat(1);
  a.row(rows + 3) << Rat(0), Rat(-1);
  b.tail(4).setConstant(Rat(-10));
  std::vector<Relation> rel(static_cast<std::size_t>(rows + 4), Relation::Ge);
  RatVec c(2);
  c << Rat(1), Rat(-2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_lp(a, b, rel, c));
  }
}
BENCHMARK(BM_SimplexRandom)->Arg(4)->Arg(8)->Arg(16);

}  // namespace
