// Copyright 2026 The simcore Authors
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

#include "simcore/extremal.hpp"

namespace simcore {
namespace {

void BM_ExtremalPlus(benchmark::State& state) {
  const auto t = static_cast<Modulus>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ExtremalPlus(t, 3));
}
BENCHMARK(BM_ExtremalPlus)->Arg(7)->Arg(100)->Arg(1000);

void BM_ExtremalMinus(benchmark::State& state) {
  const auto t = static_cast<Modulus>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ExtremalMinus(t, 3));
}
BENCHMARK(BM_ExtremalMinus)->Arg(8)->Arg(100)->Arg(1000);

// Closed forms only, no witnesses built.
void BM_SizePolynomials(benchmark::State& state) {
  std::uint64_t r = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(SizeLambdaR(5, 200, r, Family::kMinus));
    benchmark::DoNotOptimize(SizeMuS(5, 200, r));
    r = r % 99 + 1;
  }
}
BENCHMARK(BM_SizePolynomials);

void BM_ConsecutiveModuliGrid(benchmark::State& state) {
  for (auto _ : state) {
    for (Modulus t = 2; t <= 200; ++t) {
      benchmark::DoNotOptimize(LargestTTPlus1(t));
    }
  }
}
BENCHMARK(BM_ConsecutiveModuliGrid);

}  // namespace
}  // namespace simcore
