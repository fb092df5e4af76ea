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

#include "pgs/guidance.hpp"

#include <algorithm>
#include <cmath>

#include "pgs/error.hpp"

namespace pgs {

std::string_view to_string(LosSource source) {
  switch (source) {
    case LosSource::kTrue:
      return "true";
    case LosSource::kDelayed:
      return "delayed";
    case LosSource::kPredicted:
      return "predicted";
  }
  return "unknown";
}

std::optional<LosSource> parse_los_source(std::string_view name) {
  if (name == "true") return LosSource::kTrue;
  if (name == "delayed") return LosSource::kDelayed;
  if (name == "predicted") return LosSource::kPredicted;
  return std::nullopt;
}

double closing_velocity(const Eigen::Vector3d& relative_position,
                        const Eigen::Vector3d& relative_velocity) {
  const double range = relative_position.norm();
  if (!(range > 0.0)) {
    throw InvalidArgument("closing velocity undefined at zero range");
  }
  return -relative_position.dot(relative_velocity) / range;
}

Vec2 pn_command(const Vec2& los_rate, double closing_velocity,
                const GuidanceConfig& config) {
  return config.nav_ratio * closing_velocity * los_rate;
}

Vec2 select_source(double t, const GuidanceConfig& config,
                   const Vec2& true_rate, const Vec2& delayed_rate,
                   const Vec2& predicted_rate) {
  switch (config.source) {
    case LosSource::kTrue:
      return true_rate;
    case LosSource::kDelayed:
      return delayed_rate;
    case LosSource::kPredicted:
      return t < config.warmup ? delayed_rate : predicted_rate;
  }
  return delayed_rate;
}

Vec2 autopilot_step(const Vec2& cmd_accel, const Vec2& prev_deflection,
                    double dt, const AutopilotConfig& config,
                    double accel_to_deflection_gain) {
  if (!(dt > 0.0)) {
    throw InvalidArgument("autopilot_step: dt must be > 0");
  }
  const double limit = config.deflection_limit;
  Vec2 demand = accel_to_deflection_gain * cmd_accel;
  for (int i = 0; i < 2; ++i) {
    // NaN demands (e.g. zero dynamic pressure) pin to zero deflection.
    demand[i] = std::isnan(demand[i]) ? 0.0 : std::clamp(demand[i], -limit, limit);
  }
  const double decay = std::exp(-dt / config.actuator_time_constant);
  Vec2 next = decay * prev_deflection + (1.0 - decay) * demand;
  for (int i = 0; i < 2; ++i) next[i] = std::clamp(next[i], -limit, limit);
  return next;
}

}  // namespace pgs
