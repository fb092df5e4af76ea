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

#include "pgs/seeker.hpp"

#include <cmath>

#include <Eigen/Geometry>

#include "pgs/error.hpp"

namespace pgs {

LosFrame los_frame(const Eigen::Vector3d& relative_position) {
  const double range = relative_position.norm();
  if (!(range > 0.0)) {
    throw InvalidArgument("line of sight undefined at zero range");
  }
  LosFrame f;
  f.los = relative_position / range;
  Eigen::Vector3d left = Eigen::Vector3d::UnitZ().cross(f.los);
  const double n = left.norm();
  f.left = n > 1e-12 ? Eigen::Vector3d(left / n) : Eigen::Vector3d::UnitY();
  f.up = f.los.cross(f.left);
  return f;
}

Vec2 true_los_rate(const Eigen::Vector3d& relative_position,
                   const Eigen::Vector3d& relative_velocity) {
  const LosFrame f = los_frame(relative_position);
  const Eigen::Vector3d omega = relative_position.cross(relative_velocity) /
                                relative_position.squaredNorm();
  return Vec2(-omega.dot(f.left), omega.dot(f.up));
}

SeekerState delay_step(const SeekerState& state, const Vec2& true_rate,
                       double dt, const SeekerConfig& config) {
  if (!(dt > 0.0)) {
    throw InvalidArgument("seeker delay_step: dt must be > 0");
  }
  if (!true_rate.allFinite() || !state.delayed_rate.allFinite()) {
    throw InvalidArgument("seeker delay_step: non-finite input");
  }
  SeekerState next;
  next.last_true_rate = true_rate;
  if (config.lag_time_constant == 0.0) {
    next.delayed_rate = true_rate;
    return next;
  }
  const double decay = std::exp(-dt / config.lag_time_constant);
  next.delayed_rate = decay * state.delayed_rate + (1.0 - decay) * true_rate;
  return next;
}

}  // namespace pgs
