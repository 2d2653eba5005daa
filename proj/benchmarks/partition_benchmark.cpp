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

#include <numeric>
#include <vector>

#include "simcore/core_predicates.hpp"
#include "simcore/partition.hpp"

namespace simcore {
namespace {

// The staircase (n, n-1, ..., 1).
Partition Staircase(std::uint64_t n) {
  std::vector<Part> parts(n);
  std::iota(parts.rbegin(), parts.rend(), Part{1});
  return Partition(std::move(parts));
}

void BM_HookLengths(benchmark::State& state) {
  const Partition p = Staircase(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(HookLengths(p));
}
BENCHMARK(BM_HookLengths)->Arg(10)->Arg(40);

void BM_BetaRoundTrip(benchmark::State& state) {
  const Partition p = Staircase(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(FromBetaSet(ToBetaSet(p)));
}
BENCHMARK(BM_BetaRoundTrip)->Arg(10)->Arg(40);

void BM_IsTCoreAbacus(benchmark::State& state) {
  const Partition p = Staircase(40);
  for (auto _ : state) benchmark::DoNotOptimize(IsTCore(p, 2));
}
BENCHMARK(BM_IsTCoreAbacus);

void BM_IsTCoreHooks(benchmark::State& state) {
  const Partition p = Staircase(40);
  for (auto _ : state) benchmark::DoNotOptimize(IsTCoreByHooks(p, 2));
}
BENCHMARK(BM_IsTCoreHooks);

}  // namespace
}  // namespace simcore
