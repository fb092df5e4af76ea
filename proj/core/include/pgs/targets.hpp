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

#ifndef PGS_TARGETS_HPP_
#define PGS_TARGETS_HPP_

#include <cstdint>

#include <Eigen/Core>

namespace pgs {

enum class TargetKind { kLevel, kWeaving };

// Kinematic point target flying level toward the launch site at constant
// horizontal speed. The weaving variant adds a vertical velocity
// A sin(w t + phase).
struct TargetConfig {
  TargetKind kind = TargetKind::kLevel;
  Eigen::Vector3d initial_position{10000.0, 0.0, 2000.0};
  double speed = 200.0;           // m/s, horizontal
  double weave_amplitude = 5.0;   // m/s
  double weave_frequency = 3.0;   // rad/s
  double phase = 0.0;             // rad
};

struct TargetKinematics {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Vector3d velocity = Eigen::Vector3d::Zero();
};

// Unit horizontal direction from the initial position toward the origin.
Eigen::Vector3d inbound_direction(const TargetConfig& config);

// Closed-form state at time t >= 0; the vertical weave is integrated
// analytically so there is no accumulated drift.
TargetKinematics target_state(double t, const TargetConfig& config);

// Uniform phase in [0, 2 pi) from the SplitMix64 stream keyed by `seed`.
double sample_phase(std::uint64_t seed);

}  // namespace pgs

#endif  // PGS_TARGETS_HPP_
