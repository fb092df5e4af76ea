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

#include "pgs/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <thread>
#include <tuple>
#include <utility>

#include "pgs/error.hpp"
#include "pgs/metrics.hpp"
#include "pgs/random.hpp"
#include "pgs/targets.hpp"

namespace pgs {

std::vector<double> default_sweep_delays() {
  constexpr int kCount = 8;
  constexpr double kFirst = 0.025, kLast = 0.35;
  std::vector<double> d(kCount);
  for (int i = 0; i < kCount; ++i) {
    d[i] = kFirst + (kLast - kFirst) * i / (kCount - 1);
  }
  d.back() = kLast;  // avoid 0.3499999999999999
  return d;
}

std::vector<std::string> validate(const SweepConfig& c) {
  std::vector<std::string> v;
  if (c.delays.empty()) v.push_back("sweep.delays must not be empty");
  for (std::size_t i = 0; i < c.delays.size(); ++i) {
    if (!(std::isfinite(c.delays[i]) && c.delays[i] > 0.0)) {
      v.push_back("sweep.delays must be positive");
      break;
    }
    if (i > 0 && !(c.delays[i] > c.delays[i - 1])) {
      v.push_back("sweep.delays must be strictly ascending");
      break;
    }
  }
  if (c.samples_per_delay < 1) {
    v.push_back("sweep.samples_per_delay must be >= 1");
  }
  if (c.sources.empty()) v.push_back("sweep.sources must not be empty");
  for (std::size_t i = 0; i < c.sources.size(); ++i) {
    if (c.sources[i] == LosSource::kTrue) {
      v.push_back("sweep.sources may only contain delayed and predicted");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (c.sources[i] == c.sources[j]) {
        v.push_back("sweep.sources contains a duplicate");
      }
    }
  }
  return v;
}

std::vector<SweepWorkItem> plan_sweep(const SweepConfig& config) {
  std::vector<SweepWorkItem> items;
  items.reserve(config.delays.size() * config.sources.size() *
                config.samples_per_delay);
  for (std::size_t d = 0; d < config.delays.size(); ++d) {
    for (LosSource src : config.sources) {
      for (std::size_t i = 0; i < config.samples_per_delay; ++i) {
        items.push_back({d, config.delays[d], src, i,
                         derive_seed(config.master_seed, i)});
      }
    }
  }
  return items;
}

SweepRun execute_work_item(const SweepWorkItem& item,
                           const EngagementConfig& base) {
  EngagementConfig c = base;
  c.seeker.lag_time_constant = item.delay;
  c.observer = ObserverConfig(base.observer.gains(), base.observer.epsilon(),
                              item.delay, base.observer.paper_literal_step1());
  c.guidance.source = item.source;
  c.target.kind = TargetKind::kWeaving;
  c.target.phase = sample_phase(item.seed);

  SweepRun run;
  run.delay_index = item.delay_index;
  run.delay = item.delay;
  run.source = item.source;
  run.sample = item.sample;
  run.seed = item.seed;
  run.phase = c.target.phase;

  const EngagementRecord rec = run_engagement(c);
  run.termination = rec.termination;
  run.miss = rec.miss_distance;
  if (!rec.samples.empty()) {
    const MetricsReport m = compute_metrics(rec, c);
    run.rmse = item.source == LosSource::kPredicted ? m.rmse_predicted
                                                   : m.rmse_delayed;
    run.peak_accel = m.peak_accel_cmd;
  }
  return run;
}

SweepSummary aggregate(std::vector<SweepRun> runs) {
  auto key = [](const SweepRun& r) {
    return std::make_tuple(r.delay_index, static_cast<int>(r.source), r.sample);
  };
  std::sort(runs.begin(), runs.end(),
            [&](const SweepRun& a, const SweepRun& b) { return key(a) < key(b); });

  SweepSummary out;
  std::size_t i = 0;
  while (i < runs.size()) {
    std::size_t j = i;
    while (j < runs.size() && runs[j].delay_index == runs[i].delay_index &&
           runs[j].source == runs[i].source) {
      ++j;
    }
    SweepGroup g;
    g.delay = runs[i].delay;
    g.source = runs[i].source;
    double sum = 0.0;
    for (std::size_t k = i; k < j; ++k) {
      if (runs[k].termination == Termination::kObserverDivergence) {
        ++g.failure_count;
      } else {
        ++g.n;
        sum += runs[k].miss;
      }
    }
    if (g.n == 0) {
      out.warnings.push_back("no successful runs for delay " +
                             std::to_string(g.delay) + " source " +
                             std::string(to_string(g.source)) +
                             "; group omitted");
    } else {
      g.mean_miss = sum / static_cast<double>(g.n);
      double ss = 0.0;
      for (std::size_t k = i; k < j; ++k) {
        if (runs[k].termination == Termination::kObserverDivergence) continue;
        const double e = runs[k].miss - g.mean_miss;
        ss += e * e;
      }
      g.std_miss = std::sqrt(ss / static_cast<double>(g.n));
      out.groups.push_back(g);
    }
    i = j;
  }
  out.runs = std::move(runs);
  return out;
}

SweepSummary run_sweep(const SweepConfig& config,
                       const EngagementConfig& base) {
  if (auto v = validate(config); !v.empty()) throw ConfigError(std::move(v));
  if (auto v = validate(base); !v.empty()) throw ConfigError(std::move(v));

  const std::vector<SweepWorkItem> items = plan_sweep(config);
  std::vector<SweepRun> runs(items.size());

  unsigned jobs = config.jobs ? config.jobs : std::thread::hardware_concurrency();
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= items.size() || failed.load()) return;
      try {
        runs[k] = execute_work_item(items[k], base);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return aggregate(std::move(runs));
}

}  // namespace pgs
