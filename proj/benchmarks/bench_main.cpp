// Copyright 2026 The pgsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include <benchmark/benchmark.h>

#include "pgs/engagement.hpp"
#include "pgs/montecarlo.hpp"
#include "pgs/observer.hpp"

namespace {

void BM_ObserverStep(benchmark::State& state) {
  const pgs::ObserverConfig config(pgs::ObserverGains{}, 0.05, 0.2);
  const double dt = 1e-3;
  pgs::ObserverState s = pgs::reset(config, 0.0);
  for (auto _ : state) {
    s = pgs::observer_step(s, std::sin(s.t), dt, config);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ObserverStep);

void BM_Engagement(benchmark::State& state) {
  pgs::EngagementConfig config;
  config.guidance.source = static_cast<pgs::LosSource>(state.range(0));
  for (auto _ : state) {
    auto rec = pgs::run_engagement(config);
    benchmark::DoNotOptimize(rec.miss_distance);
  }
}
BENCHMARK(BM_Engagement)
    ->Arg(static_cast<int>(pgs::LosSource::kDelayed))
    ->Arg(static_cast<int>(pgs::LosSource::kPredicted))
    ->Unit(benchmark::kMillisecond);

void BM_SweepItem(benchmark::State& state) {
  const pgs::EngagementConfig base;
  const pgs::SweepWorkItem item{0, 0.2, pgs::LosSource::kPredicted, 0, 42};
  for (auto _ : state) {
    auto run = pgs::execute_work_item(item, base);
    benchmark::DoNotOptimize(run.miss);
  }
}
BENCHMARK(BM_SweepItem)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
