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

// Ideal line-of-sight rate measurement plus a first-order seeker lag.
//
// Channel order everywhere is (pitch, yaw): index 0 is the elevation
// channel, index 1 the azimuth channel.

#ifndef PGS_SEEKER_HPP_
#define PGS_SEEKER_HPP_

#include <Eigen/Core>

namespace pgs {

using Vec2 = Eigen::Vector2d;

struct SeekerConfig {
  double lag_time_constant = 0.2;  // s, 0 disables the lag
};

struct SeekerState {
  Vec2 delayed_rate = Vec2::Zero();
  Vec2 last_true_rate = Vec2::Zero();
};

// Orthonormal frame attached to the line of sight. `left` is horizontal
// (z cross los, normalized); `up` = los cross left. A rotation of the LOS
// toward `up` is a positive elevation rate, toward `left` a positive
// azimuth rate.
struct LosFrame {
  Eigen::Vector3d los;
  Eigen::Vector3d left;
  Eigen::Vector3d up;
};

LosFrame los_frame(const Eigen::Vector3d& relative_position);

// omega = (R x Rdot) / |R|^2 resolved on (-left, up). Throws
// InvalidArgument at zero range.
Vec2 true_los_rate(const Eigen::Vector3d& relative_position,
                   const Eigen::Vector3d& relative_velocity);

// delayed' = delayed e^{-dt/T} + true (1 - e^{-dt/T}); exact for inputs held
// over the step. T = 0 passes the input through. Requires dt > 0.
SeekerState delay_step(const SeekerState& state, const Vec2& true_rate,
                       double dt, const SeekerConfig& config);

}  // namespace pgs

#endif  // PGS_SEEKER_HPP_
