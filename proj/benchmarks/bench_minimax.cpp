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
#include "mmac/minimax_cert.hpp"
#include "mmac/simulate.hpp"

#include <benchmark/benchmark.h>

namespace {

constexpr double kLevel = 50.0;

const mmac::MinimaxCertificate& certificate() {
  static const auto cert =
      mmac::synthesize_certificate(mmac::bench::four_models().model_set, mmac::bench::four_models().penalties, kLevel)
          .value();
  return cert;
}

void BM_SynthesizeCertificate(benchmark::State& state) {
  const auto& cfg = mmac::bench::four_models();
  for (auto _ : state) {
    auto cert = mmac::synthesize_certificate(cfg.model_set, cfg.penalties, kLevel);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_SynthesizeCertificate)->Unit(benchmark::kMillisecond);

void BM_VerifyCertificate(benchmark::State& state) {
  const auto& cfg = mmac::bench::four_models();
  const auto& cert = certificate();
  for (auto _ : state) benchmark::DoNotOptimize(mmac::verify_certificate(cfg.model_set, cfg.penalties, cert, 1e-8));
}
BENCHMARK(BM_VerifyCertificate)->Unit(benchmark::kMicrosecond);

void BM_MinimalFeasibleGamma(benchmark::State& state) {
  const auto& cfg = mmac::bench::four_models();
  for (auto _ : state) benchmark::DoNotOptimize(mmac::minimal_feasible_gamma(cfg.model_set, cfg.penalties));
}
BENCHMARK(BM_MinimalFeasibleGamma)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_PairedRollout(benchmark::State& state) {
  const auto& cfg = mmac::bench::four_models();
  auto setup = mmac::RolloutSetup::from(cfg);
  setup.horizon = static_cast<int>(state.range(0));
  const auto& m = cfg.model_set[cfg.true_model];
  const auto comp = mmac::solve_riccati(m.A, m.B, cfg.penalties, kLevel).value();
  const auto spec = mmac::make_hinf_worst_case(comp.L);
  for (auto _ : state) benchmark::DoNotOptimize(mmac::run_paired(setup, certificate(), comp.K, spec));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PairedRollout)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oN)
    ->Unit(benchmark::kMicrosecond);

}  // namespace
