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

#include "simcore/enumeration.hpp"

namespace simcore {
namespace {

void BM_SequenceEnumerator(benchmark::State& state) {
  const auto t = static_cast<Modulus>(state.range(0));
  const auto m = static_cast<std::uint64_t>(state.range(1));
  std::uint64_t n = 0;
  for (auto _ : state) {
    SequenceEnumerator it(t, m, Family::kPlus);
    n = 0;
    while (it.Next()) ++n;
    benchmark::DoNotOptimize(n);
  }
  state.counters["sequences"] = static_cast<double>(n);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_SequenceEnumerator)->Args({8, 2})->Args({12, 3})->Args({12, 5});

void BM_OrderIdealEnumerator(benchmark::State& state) {
  const auto a = static_cast<Modulus>(state.range(0));
  const auto b = static_cast<Modulus>(state.range(1));
  const bool distinct = state.range(2) != 0;
  std::uint64_t n = 0;
  for (auto _ : state) {
    CoreBetaSetEnumerator it(a, b, distinct);
    n = 0;
    while (it.Advance()) ++n;
    benchmark::DoNotOptimize(n);
  }
  state.counters["cores"] = static_cast<double>(n);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_OrderIdealEnumerator)
    ->Args({7, 9, 0})
    ->Args({9, 10, 0})
    ->Args({12, 61, 1})
    ->Args({12, 59, 1});

void BM_CountDistinctCore(benchmark::State& state) {
  const auto t = static_cast<Modulus>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(CountDistinctCore(t, 3, Family::kMinus));
  }
}
BENCHMARK(BM_CountDistinctCore)->Arg(10)->Arg(40);

void BM_FamilyStats(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeFamilyStats(8, 9, false));
  }
}
BENCHMARK(BM_FamilyStats);

}  // namespace
}  // namespace simcore
