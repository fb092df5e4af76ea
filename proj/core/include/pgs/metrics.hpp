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

#ifndef PGS_METRICS_HPP_
#define PGS_METRICS_HPP_

#include <cstddef>
#include <optional>
#include <span>

#include "pgs/engagement.hpp"
#include "pgs/seeker.hpp"

namespace pgs {

// RMSE of predicted[i] against reference[i + delta/dt] over the overlap.
// delta must be a non-negative integer multiple of dt (to 1e-9) and the
// overlap must hold at least `min_samples` points; InvalidArgument
// otherwise.
double los_rmse(std::span<const double> predicted,
                std::span<const double> reference, double delta, double dt,
                std::size_t min_samples = 1);

// Two-channel form: square root of the mean of the per-channel mean squared
// errors.
double los_rmse(std::span<const Vec2> predicted,
                std::span<const Vec2> reference, double delta, double dt,
                std::size_t min_samples = 1);

struct AccelStats {
  double peak = 0.0;                     // max |accel_cmd|_2, m/s^2
  double integral_abs_deflection = 0.0;  // trapezoid of |deflection|_1, rad s
};

// Throws InvalidArgument for an empty record.
AccelStats commanded_accel_stats(const EngagementRecord& record);

inline constexpr std::size_t kMinRmseSamples = 100;

struct MetricsReport {
  // LOS-rate errors against the true rate at the same instant, after the
  // guidance warm-up window. Empty when fewer than kMinRmseSamples samples
  // remain.
  std::optional<double> rmse_delayed;
  std::optional<double> rmse_predicted;
  // Same, over the whole record.
  std::optional<double> rmse_delayed_full;
  std::optional<double> rmse_predicted_full;
  double miss_distance = 0.0;
  double miss_time = 0.0;
  double peak_accel_cmd = 0.0;
  double integrated_abs_deflection = 0.0;
};

MetricsReport compute_metrics(const EngagementRecord& record,
                              const EngagementConfig& config);

}  // namespace pgs

#endif  // PGS_METRICS_HPP_
