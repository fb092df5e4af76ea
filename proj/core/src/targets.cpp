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

#include "pgs/targets.hpp"

#include <cmath>
#include <numbers>

#include "pgs/random.hpp"

namespace pgs {

Eigen::Vector3d inbound_direction(const TargetConfig& config) {
  Eigen::Vector3d dir(-config.initial_position.x(),
                      -config.initial_position.y(), 0.0);
  const double n = dir.norm();
  // A target directly overhead has no inbound azimuth; fly along -x.
  if (n == 0.0) return Eigen::Vector3d(-1.0, 0.0, 0.0);
  return dir / n;
}

TargetKinematics target_state(double t, const TargetConfig& config) {
  const Eigen::Vector3d v_h = config.speed * inbound_direction(config);
  TargetKinematics k;
  k.position = config.initial_position + v_h * t;
  k.velocity = v_h;
  if (config.kind == TargetKind::kWeaving && config.weave_amplitude != 0.0) {
    const double a = config.weave_amplitude;
    const double w = config.weave_frequency;
    const double phi = config.phase;
    k.velocity.z() = a * std::sin(w * t + phi);
    k.position.z() += (a / w) * (std::cos(phi) - std::cos(w * t + phi));
  }
  return k;
}

double sample_phase(std::uint64_t seed) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  const double phase = uniform01(seed) * kTwoPi;
  return phase < kTwoPi ? phase : std::nextafter(kTwoPi, 0.0);
}

}  // namespace pgs
