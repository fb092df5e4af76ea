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

#ifndef PGS_GUIDANCE_HPP_
#define PGS_GUIDANCE_HPP_

#include <optional>
#include <string_view>

#include <Eigen/Core>

#include "pgs/seeker.hpp"

namespace pgs {

// Which LOS-rate signal drives the guidance law.
enum class LosSource { kTrue, kDelayed, kPredicted };

std::string_view to_string(LosSource source);
std::optional<LosSource> parse_los_source(std::string_view name);

struct GuidanceConfig {
  double nav_ratio = 4.0;
  LosSource source = LosSource::kPredicted;
  // With source = predicted, the delayed signal is used until t >= warmup
  // while the observer's peaking transient dies out.
  double warmup = 2.0;
};

struct AutopilotConfig {
  double actuator_time_constant = 0.02;  // s
  double deflection_limit = 0.52;        // rad
};

struct GuidanceCommand {
  Vec2 accel_cmd = Vec2::Zero();       // m/s^2, LOS pitch/yaw channels
  Vec2 deflection_cmd = Vec2::Zero();  // rad, body pitch/yaw fins
};

// Vc = -(R . Rdot)/|R|, positive while closing. Throws at zero range.
double closing_velocity(const Eigen::Vector3d& relative_position,
                        const Eigen::Vector3d& relative_velocity);

// a = N Vc lambda_dot, per channel.
Vec2 pn_command(const Vec2& los_rate, double closing_velocity,
                const GuidanceConfig& config);

Vec2 select_source(double t, const GuidanceConfig& config,
                   const Vec2& true_rate, const Vec2& delayed_rate,
                   const Vec2& predicted_rate);

// Deflection demand gain * accel, clamped to +-deflection_limit, followed
// through a first-order actuator lag (exact exponential update).
// `accel_to_deflection_gain` is rad per m/s^2 at moment trim.
Vec2 autopilot_step(const Vec2& cmd_accel, const Vec2& prev_deflection,
                    double dt, const AutopilotConfig& config,
                    double accel_to_deflection_gain);

}  // namespace pgs

#endif  // PGS_GUIDANCE_HPP_
