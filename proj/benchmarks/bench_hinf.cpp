/*
 Copyright 2026 The mmac Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include "bench_fixture.hpp"
#include "mmac/hinf.hpp"

#include <benchmark/benchmark.h>

namespace {

using mmac::ModelIndex;

void BM_SolveRiccati(benchmark::State& state) {
  const auto& cfg = mmac::bench::four_models();
  const auto& m = cfg.model_set[ModelIndex(static_cast<int>(state.range(0)))];
  for (auto _ : state) {
    auto sol = mmac::solve_riccati(m.A, m.B, cfg.penalties, 10.0);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_SolveRiccati)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_OptimalAttenuation(benchmark::State& state) {
  const auto& cfg = mmac::bench::four_models();
  const auto& m = cfg.model_set[ModelIndex(static_cast<int>(state.range(0)))];
  for (auto _ : state) benchmark::DoNotOptimize(mmac::optimal_attenuation(m.A, m.B, cfg.penalties));
}
BENCHMARK(BM_OptimalAttenuation)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_ClosedLoopScan(benchmark::State& state) {
  const auto& cfg = mmac::bench::four_models();
  const auto& m = cfg.model_set[ModelIndex(2)];
  const auto K = mmac::solve_riccati(m.A, m.B, cfg.penalties, 10.0).value().K;
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mmac::closed_loop_scan(m.A, m.B, K, cfg.penalties, grid));
  state.SetComplexityN(grid);
}
BENCHMARK(BM_ClosedLoopScan)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oN)
    ->Unit(benchmark::kMillisecond);

}  // namespace
