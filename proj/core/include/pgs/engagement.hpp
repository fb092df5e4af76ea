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

// Closed-loop simulation of a single missile/target engagement.
//
// Every step of length dt does, in order:
//   1. target kinematics at t,
//   2. true LOS rate from the exact relative state,
//   3. seeker lag update,
//   4. one observer step per channel on the lagged rate,
//   5. source selection -> proportional navigation -> autopilot,
//   6. one RK4 step of the airframe with the fin deflections held.
// The loop stops at closest approach, ground impact, timeout, or when any
// state goes non-finite.

#ifndef PGS_ENGAGEMENT_HPP_
#define PGS_ENGAGEMENT_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "pgs/airframe.hpp"
#include "pgs/guidance.hpp"
#include "pgs/observer.hpp"
#include "pgs/seeker.hpp"
#include "pgs/targets.hpp"

namespace pgs {

// Rail launch from the origin toward the target's initial azimuth.
struct LaunchConfig {
  double speed = 20.0;                    // m/s
  double elevation = 0.7853981633974483;  // rad
};

struct EngagementConfig {
  double dt = 1e-3;
  double max_time = 60.0;
  LaunchConfig launch;
  ObserverConfig observer{ObserverGains{}, 0.05, 0.2};
  SeekerConfig seeker;
  GuidanceConfig guidance;
  AutopilotConfig autopilot;
  TargetConfig target;
  std::shared_ptr<const Airframe> airframe;  // null selects default_airframe()
  Environment environment;

  const Airframe& airframe_or_default() const {
    return airframe ? *airframe : default_airframe();
  }
};

// Every violated invariant, empty when the config is runnable.
std::vector<std::string> validate(const EngagementConfig& config);

enum class Termination {
  kClosestApproach,
  kGroundImpact,
  kTimeout,
  kObserverDivergence,
};

std::string_view to_string(Termination reason);

struct Sample {
  double t = 0.0;
  Vec2 los_true = Vec2::Zero();
  Vec2 los_delayed = Vec2::Zero();
  Vec2 los_predicted = Vec2::Zero();
  Vec2 accel_cmd = Vec2::Zero();
  // Fin deflections applied over [t, t + dt).
  Vec2 deflection = Vec2::Zero();
  VehicleState missile;
  TargetKinematics target;
  double range = 0.0;
};

struct EngagementRecord {
  std::vector<Sample> samples;
  double dt = 0.0;
  double miss_distance = 0.0;
  double miss_time = 0.0;
  Termination termination = Termination::kTimeout;
  std::string diagnostic;
  // Instant the guidance input switched from delayed to predicted.
  std::optional<double> source_switch_time;
  // Largest |alpha| or |beta| seen, and how many samples exceeded 25 deg
  // (stall is not modelled, so such runs are of doubtful quality).
  double max_incidence = 0.0;
  std::size_t incidence_warnings = 0;
};

inline constexpr double kIncidenceWarning = 0.4363323129985824;  // 25 deg

// Never throws on numerical trouble: a divergence ends the record with
// Termination::kObserverDivergence and a diagnostic. Throws ConfigError if
// validate() reports problems.
EngagementRecord run_engagement(const EngagementConfig& config);

struct ClosestApproach {
  double distance = 0.0;
  double time = 0.0;
};

// Minimum missile-target distance. Around the smallest sampled range the
// relative position is interpolated by a cubic Hermite polynomial built
// from the recorded positions and velocities, and minimized. Throws
// InvalidArgument for an empty record.
ClosestApproach miss_distance(const EngagementRecord& record);

// Re-integrates the airframe from sample `first` over `steps` recorded
// intervals at dt / substeps, replaying the recorded fin deflections, and
// returns the closest approach found on the fine grid.
ClosestApproach restep_closest_approach(const EngagementRecord& record,
                                        const EngagementConfig& config,
                                        std::size_t first, std::size_t steps,
                                        int substeps);

}  // namespace pgs

#endif  // PGS_ENGAGEMENT_HPP_
