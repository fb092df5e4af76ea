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

// Seeker-delay sweep against the weaving target.
//
// For each delay d and sample index i the target phase is drawn from
// derive_seed(master_seed, i), so the same phases are reused across delays
// and every source sees the same target (paired design). Each work item is
// a pure function of its key, which makes the summary independent of
// execution order and thread count.

#ifndef PGS_MONTECARLO_HPP_
#define PGS_MONTECARLO_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgs/engagement.hpp"
#include "pgs/guidance.hpp"

namespace pgs {

// Eight delays evenly spaced over [0.025, 0.35] s.
std::vector<double> default_sweep_delays();

struct SweepConfig {
  std::vector<double> delays = default_sweep_delays();
  std::size_t samples_per_delay = 25;
  std::uint64_t master_seed = 0;
  std::vector<LosSource> sources = {LosSource::kDelayed, LosSource::kPredicted};
  unsigned jobs = 0;  // 0 = std::thread::hardware_concurrency()
};

std::vector<std::string> validate(const SweepConfig& config);

struct SweepWorkItem {
  std::size_t delay_index = 0;
  double delay = 0.0;
  LosSource source = LosSource::kDelayed;
  std::size_t sample = 0;
  std::uint64_t seed = 0;
};

struct SweepRun {
  std::size_t delay_index = 0;
  double delay = 0.0;
  LosSource source = LosSource::kDelayed;
  std::size_t sample = 0;
  std::uint64_t seed = 0;
  double phase = 0.0;
  double miss = 0.0;
  std::optional<double> rmse;  // predicted-source LOS RMSE, or delayed
  double peak_accel = 0.0;
  Termination termination = Termination::kTimeout;
};

struct SweepGroup {
  double delay = 0.0;
  LosSource source = LosSource::kDelayed;
  double mean_miss = 0.0;
  double std_miss = 0.0;  // population standard deviation
  std::size_t n = 0;
  std::size_t failure_count = 0;
};

struct SweepSummary {
  std::vector<SweepGroup> groups;  // ordered by delay, then source
  std::vector<SweepRun> runs;      // ordered by delay, source, sample
  std::vector<std::string> warnings;
};

// Work items in canonical order (delay, source, sample).
std::vector<SweepWorkItem> plan_sweep(const SweepConfig& config);

// One weaving-target engagement with seeker lag = observer horizon = delay.
// Never throws for numerical trouble; divergence shows up in `termination`.
SweepRun execute_work_item(const SweepWorkItem& item,
                           const EngagementConfig& base);

// Groups by (delay, source); failed (diverged) runs are counted but kept
// out of mean/std. Groups with no successful run are omitted with a
// warning. Input order does not matter.
SweepSummary aggregate(std::vector<SweepRun> runs);

// Plans, executes on a pool of `config.jobs` threads, aggregates.
SweepSummary run_sweep(const SweepConfig& config, const EngagementConfig& base);

}  // namespace pgs

#endif  // PGS_MONTECARLO_HPP_
