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

// File formats written by the command-line tool.
//
// CSV numbers use the shortest representation that reads back to the same
// double. JSON documents always embed the fully resolved configuration.

#ifndef PGS_IO_HPP_
#define PGS_IO_HPP_

#include <iosfwd>
#include <string>

#include "pgs/config.hpp"
#include "pgs/engagement.hpp"
#include "pgs/metrics.hpp"
#include "pgs/montecarlo.hpp"

namespace pgs {

// Shortest round-trip decimal form of x.
std::string format_double(double x);

// Columns: t, lam_true_p, lam_true_y, lam_del_p, lam_del_y, lam_pred_p,
// lam_pred_y, acc_cmd_p, acc_cmd_y, defl_p, defl_y, mx, my, mz, tx, ty, tz,
// range.
void write_engagement_csv(std::ostream& out, const EngagementRecord& record);

std::string metrics_json(const MetricsReport& metrics,
                         const EngagementRecord& record,
                         const SimulationConfig& config);

// Columns: delay, source, sample, seed, miss, rmse, peak_accel, termination.
void write_sweep_runs_csv(std::ostream& out, const SweepSummary& summary);

std::string sweep_summary_json(const SweepSummary& summary,
                               const SimulationConfig& config);

// One row per delay; for each source the mean, mean - std and mean + std
// of the miss distance. Cells of omitted groups are left empty.
void write_plotdata_csv(std::ostream& out, const SweepSummary& summary);

}  // namespace pgs

#endif  // PGS_IO_HPP_
