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

#include "pgs/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pgs/error.hpp"

namespace pgs {
namespace {

std::size_t shift_steps(double delta, double dt) {
  if (!(dt > 0.0)) throw InvalidArgument("los_rmse: dt must be > 0");
  if (!(delta >= 0.0)) throw InvalidArgument("los_rmse: delta must be >= 0");
  const double steps = std::round(delta / dt);
  if (std::abs(steps * dt - delta) > 1e-9) {
    throw InvalidArgument("los_rmse: delta " + std::to_string(delta) +
                          " is not an integer multiple of dt " +
                          std::to_string(dt));
  }
  return static_cast<std::size_t>(steps);
}

std::size_t overlap(std::size_t n_pred, std::size_t n_ref, std::size_t shift,
                    std::size_t min_samples) {
  const std::size_t n =
      n_ref > shift ? std::min(n_pred, n_ref - shift) : std::size_t{0};
  if (n == 0 || n < min_samples) {
    throw InvalidArgument("los_rmse: overlap of " + std::to_string(n) +
                          " samples is shorter than the required " +
                          std::to_string(std::max<std::size_t>(min_samples, 1)));
  }
  return n;
}

}  // namespace

double los_rmse(std::span<const double> predicted,
                std::span<const double> reference, double delta, double dt,
                std::size_t min_samples) {
  const std::size_t shift = shift_steps(delta, dt);
  const std::size_t n =
      overlap(predicted.size(), reference.size(), shift, min_samples);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = predicted[i] - reference[i + shift];
    sum += e * e;
  }
  return std::sqrt(sum / static_cast<double>(n));
}

double los_rmse(std::span<const Vec2> predicted,
                std::span<const Vec2> reference, double delta, double dt,
                std::size_t min_samples) {
  const std::size_t shift = shift_steps(delta, dt);
  const std::size_t n =
      overlap(predicted.size(), reference.size(), shift, min_samples);
  double sum_p = 0.0, sum_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e = predicted[i] - reference[i + shift];
    sum_p += e[0] * e[0];
    sum_y += e[1] * e[1];
  }
  const double nn = static_cast<double>(n);
  return std::sqrt(0.5 * (sum_p / nn + sum_y / nn));
}

AccelStats commanded_accel_stats(const EngagementRecord& record) {
  const auto& s = record.samples;
  if (s.empty()) throw InvalidArgument("commanded_accel_stats: empty record");
  AccelStats out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.peak = std::max(out.peak, s[i].accel_cmd.norm());
    if (i > 0) {
      out.integral_abs_deflection +=
          0.5 * (s[i].deflection.lpNorm<1>() + s[i - 1].deflection.lpNorm<1>()) *
          (s[i].t - s[i - 1].t);
    }
  }
  return out;
}

MetricsReport compute_metrics(const EngagementRecord& record,
                              const EngagementConfig& config) {
  MetricsReport m;
  const ClosestApproach ca = miss_distance(record);
  m.miss_distance = ca.distance;
  m.miss_time = ca.time;
  const AccelStats a = commanded_accel_stats(record);
  m.peak_accel_cmd = a.peak;
  m.integrated_abs_deflection = a.integral_abs_deflection;

  const auto& s = record.samples;
  std::vector<Vec2> truth, delayed, predicted;
  truth.reserve(s.size());
  delayed.reserve(s.size());
  predicted.reserve(s.size());
  for (const auto& x : s) {
    truth.push_back(x.los_true);
    delayed.push_back(x.los_delayed);
    predicted.push_back(x.los_predicted);
  }

  // The delayed signal trails the truth by about the lag, so its lag-ahead
  // prediction is scored against the truth at the same instant.
  auto score = [&](std::size_t from, std::optional<double>& del,
                   std::optional<double>& pred) {
    if (s.size() < from + kMinRmseSamples) return;
    std::span<const Vec2> t(truth.data() + from, truth.size() - from);
    std::span<const Vec2> d(delayed.data() + from, delayed.size() - from);
    std::span<const Vec2> p(predicted.data() + from, predicted.size() - from);
    del = los_rmse(d, t, 0.0, record.dt, kMinRmseSamples);
    pred = los_rmse(p, t, 0.0, record.dt, kMinRmseSamples);
  };

  std::size_t warm = 0;
  while (warm < s.size() && s[warm].t < config.guidance.warmup) ++warm;
  score(warm, m.rmse_delayed, m.rmse_predicted);
  score(0, m.rmse_delayed_full, m.rmse_predicted_full);
  return m;
}

}  // namespace pgs
