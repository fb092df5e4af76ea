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

#include "pgs/engagement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Geometry>

#include "pgs/error.hpp"

namespace pgs {
namespace {

// Consecutive range increases that confirm a closest approach.
constexpr int kOpeningSteps = 3;

struct HermiteMin {
  double s = 0.0;  // fraction of the interval
  double distance = 0.0;
};

// Cubic Hermite relative position on [0, 1] from endpoint positions and
// velocities (velocities scaled by the interval length h).
Eigen::Vector3d hermite(const Eigen::Vector3d& p0, const Eigen::Vector3d& v0,
                        const Eigen::Vector3d& p1, const Eigen::Vector3d& v1,
                        double h, double s) {
  const double s2 = s * s;
  const double s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * p0 + (s3 - 2 * s2 + s) * h * v0 +
         (-2 * s3 + 3 * s2) * p1 + (s3 - s2) * h * v1;
}

HermiteMin minimize_hermite(const Eigen::Vector3d& p0,
                            const Eigen::Vector3d& v0,
                            const Eigen::Vector3d& p1,
                            const Eigen::Vector3d& v1, double h) {
  auto dist = [&](double s) { return hermite(p0, v0, p1, v1, h, s).norm(); };
  constexpr int kGrid = 64;
  int best = 0;
  double best_d = dist(0.0);
  for (int i = 1; i <= kGrid; ++i) {
    const double d = dist(static_cast<double>(i) / kGrid);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  // Golden-section search on the grid cell pair around the best node.
  double a = std::max(0, best - 1) / static_cast<double>(kGrid);
  double b = std::min(kGrid, best + 1) / static_cast<double>(kGrid);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = dist(c), fd = dist(d);
  for (int it = 0; it < 80 && b - a > 1e-14; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = dist(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = dist(d);
    }
  }
  const double s = 0.5 * (a + b);
  HermiteMin out{s, dist(s)};
  if (best_d < out.distance) out = {static_cast<double>(best) / kGrid, best_d};
  return out;
}

Eigen::Vector3d relative_position(const Sample& s) {
  return s.target.position - s.missile.position;
}

Eigen::Vector3d relative_velocity(const Sample& s) {
  return s.target.velocity - s.missile.velocity;
}

VehicleState launch_state(const EngagementConfig& config) {
  const Airframe& airframe = config.airframe_or_default();
  VehicleState s;
  const auto& p = config.target.initial_position;
  s.yaw = (p.x() == 0.0 && p.y() == 0.0) ? 0.0 : std::atan2(p.y(), p.x());
  s.pitch = config.launch.elevation;
  s.velocity = config.launch.speed * body_axes(s.pitch, s.yaw).x;
  s.mass = airframe.thrust.mass(0.0);
  return s;
}

}  // namespace

std::string_view to_string(Termination reason) {
  switch (reason) {
    case Termination::kClosestApproach:
      return "closest_approach";
    case Termination::kGroundImpact:
      return "ground_impact";
    case Termination::kTimeout:
      return "timeout";
    case Termination::kObserverDivergence:
      return "observer_divergence";
  }
  return "unknown";
}

std::vector<std::string> validate(const EngagementConfig& c) {
  std::vector<std::string> v;
  if (!(std::isfinite(c.dt) && c.dt > 0.0)) {
    v.push_back("engagement.dt must be > 0");
  } else if (c.dt > c.observer.max_step()) {
    v.push_back("engagement.dt = " + std::to_string(c.dt) +
                " exceeds observer epsilon/4 = " +
                std::to_string(c.observer.max_step()) +
                " (stiff observer would be unstable under RK4)");
  }
  if (!(std::isfinite(c.max_time) && c.max_time > 0.0)) {
    v.push_back("engagement.max_time must be > 0");
  }
  if (!(std::isfinite(c.launch.speed) && c.launch.speed > 0.0)) {
    v.push_back("engagement.launch_speed must be > 0");
  }
  if (!(std::abs(c.launch.elevation) < std::numbers::pi / 2.0)) {
    v.push_back("engagement.launch_elevation must lie in (-pi/2, pi/2)");
  }
  if (!(std::isfinite(c.seeker.lag_time_constant) &&
        c.seeker.lag_time_constant >= 0.0)) {
    v.push_back("seeker.lag_time_constant must be >= 0");
  }
  if (!(std::isfinite(c.guidance.nav_ratio) && c.guidance.nav_ratio > 0.0)) {
    v.push_back("guidance.nav_ratio must be > 0");
  }
  if (!(std::isfinite(c.guidance.warmup) && c.guidance.warmup >= 0.0)) {
    v.push_back("guidance.warmup must be >= 0");
  }
  if (!(std::isfinite(c.autopilot.actuator_time_constant) &&
        c.autopilot.actuator_time_constant > 0.0)) {
    v.push_back("autopilot.actuator_time_constant must be > 0");
  }
  if (!(std::isfinite(c.autopilot.deflection_limit) &&
        c.autopilot.deflection_limit > 0.0)) {
    v.push_back("autopilot.deflection_limit must be > 0");
  }
  if (!c.target.initial_position.allFinite()) {
    v.push_back("target.position must be finite");
  } else if (c.target.initial_position.z() < 0.0 ||
             c.target.initial_position.z() > kAtmosphereCeiling) {
    v.push_back("target.position altitude must lie in [0, 47000] m");
  } else if (c.target.initial_position.norm() == 0.0) {
    v.push_back("target.position must not coincide with the launch site");
  }
  if (!(std::isfinite(c.target.speed) && c.target.speed > 0.0)) {
    v.push_back("target.speed must be > 0");
  }
  if (!(std::isfinite(c.target.weave_amplitude) &&
        c.target.weave_amplitude >= 0.0)) {
    v.push_back("target.weave_amplitude must be >= 0");
  }
  if (c.target.kind == TargetKind::kWeaving &&
      !(std::isfinite(c.target.weave_frequency) &&
        c.target.weave_frequency > 0.0)) {
    v.push_back("target.weave_frequency must be > 0 for a weaving target");
  }
  if (!std::isfinite(c.target.phase)) {
    v.push_back("target.phase must be finite");
  }
  return v;
}

EngagementRecord run_engagement(const EngagementConfig& config) {
  if (auto violations = validate(config); !violations.empty()) {
    throw ConfigError(std::move(violations));
  }
  const Airframe& airframe = config.airframe_or_default();
  const double dt = config.dt;

  EngagementRecord rec;
  rec.dt = dt;
  rec.samples.reserve(
      static_cast<std::size_t>(std::min(config.max_time / dt, 2.0e5)) + 2);

  VehicleState missile = launch_state(config);
  SeekerState seeker;
  std::array<ObserverState, 2> observers{};
  Vec2 deflection = Vec2::Zero();
  int opening = 0;
  bool switched = false;

  auto finish = [&](Termination reason) {
    rec.termination = reason;
    if (rec.samples.empty()) return;
    ClosestApproach ca = miss_distance(rec);
    if (!std::isfinite(ca.distance)) {
      const std::size_t first = rec.samples.size() > 1
                                    ? rec.samples.size() - 2 : 0;
      ca = restep_closest_approach(rec, config, first,
                                   rec.samples.size() - 1 - first, 100);
    }
    rec.miss_distance = ca.distance;
    rec.miss_time = ca.time;
  };

  try {
    for (std::size_t k = 0;; ++k) {
      const double t = static_cast<double>(k) * dt;
      const TargetKinematics target = target_state(t, config.target);
      const Eigen::Vector3d r = target.position - missile.position;
      const Eigen::Vector3d rdot = target.velocity - missile.velocity;
      const Vec2 los_true = true_los_rate(r, rdot);

      if (k == 0) {
        // Seeker locked on before launch.
        seeker.delayed_rate = los_true;
        seeker.last_true_rate = los_true;
        for (int ch = 0; ch < 2; ++ch) {
          observers[ch] = reset(config.observer, los_true[ch]);
        }
      } else {
        seeker = delay_step(seeker, los_true, dt, config.seeker);
        for (int ch = 0; ch < 2; ++ch) {
          observers[ch] = observer_step(observers[ch], seeker.delayed_rate[ch],
                                        dt, config.observer);
        }
      }
      const Vec2 los_pred(observers[0].step2[0], observers[1].step2[0]);

      const Vec2 los = select_source(t, config.guidance, los_true,
                                     seeker.delayed_rate, los_pred);
      if (!switched && config.guidance.source == LosSource::kPredicted &&
          t >= config.guidance.warmup) {
        switched = true;
        rec.source_switch_time = t;
      }
      const double vc = closing_velocity(r, rdot);
      const Vec2 accel_cmd = pn_command(los, vc, config.guidance);

      const LosFrame frame = los_frame(r);
      const Eigen::Vector3d accel_vec =
          accel_cmd[0] * frame.up + accel_cmd[1] * frame.left;
      const BodyAxes body = body_axes(missile.pitch, missile.yaw);
      const Vec2 body_cmd(accel_vec.dot(body.z), accel_vec.dot(body.y));
      const double gain =
          1.0 / trim_acceleration_per_deflection(missile, airframe,
                                                 config.environment);
      deflection =
          autopilot_step(body_cmd, deflection, dt, config.autopilot, gain);

      Sample s;
      s.t = t;
      s.los_true = los_true;
      s.los_delayed = seeker.delayed_rate;
      s.los_predicted = los_pred;
      s.accel_cmd = accel_cmd;
      s.deflection = deflection;
      s.missile = missile;
      s.target = target;
      s.range = r.norm();
      rec.samples.push_back(s);

      const Incidence inc = incidence(missile);
      const double worst = std::max(std::abs(inc.alpha), std::abs(inc.beta));
      rec.max_incidence = std::max(rec.max_incidence, worst);
      if (worst > kIncidenceWarning) ++rec.incidence_warnings;

      if (k > 0) {
        const double prev = rec.samples[k - 1].range;
        opening = s.range > prev ? opening + 1 : 0;
        if (opening >= kOpeningSteps) {
          finish(Termination::kClosestApproach);
          return rec;
        }
        if (missile.position.z() <= 0.0 && missile.velocity.z() < 0.0) {
          finish(Termination::kGroundImpact);
          return rec;
        }
      }
      if (t >= config.max_time) {
        finish(Termination::kTimeout);
        return rec;
      }

      missile = vehicle_step(missile, Deflections{deflection[0], deflection[1]},
                             airframe, t, dt, config.environment);
      if (!is_finite(missile)) {
        throw DivergenceError("airframe state is not finite at t = " +
                              std::to_string(t + dt));
      }
    }
  } catch (const Error& e) {
    rec.diagnostic = e.what();
    finish(Termination::kObserverDivergence);
  }
  return rec;
}

ClosestApproach miss_distance(const EngagementRecord& record) {
  const auto& s = record.samples;
  if (s.empty()) {
    throw InvalidArgument("miss_distance: empty record");
  }
  std::size_t m = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i].range < s[m].range) m = i;
  }
  ClosestApproach best{s[m].range, s[m].t};
  auto consider = [&](std::size_t i) {
    const double h = s[i + 1].t - s[i].t;
    const HermiteMin hm = minimize_hermite(
        relative_position(s[i]), relative_velocity(s[i]),
        relative_position(s[i + 1]), relative_velocity(s[i + 1]), h);
    if (hm.distance < best.distance) {
      best = {hm.distance, s[i].t + hm.s * h};
    }
  };
  if (m > 0) consider(m - 1);
  if (m + 1 < s.size()) consider(m);
  return best;
}

ClosestApproach restep_closest_approach(const EngagementRecord& record,
                                        const EngagementConfig& config,
                                        std::size_t first, std::size_t steps,
                                        int substeps) {
  const auto& s = record.samples;
  if (first >= s.size() || first + steps >= s.size() + 1 || substeps < 1) {
    throw InvalidArgument("restep_closest_approach: bad sample range");
  }
  const Airframe& airframe = config.airframe_or_default();
  const double h = record.dt / substeps;

  VehicleState missile = s[first].missile;
  double t = s[first].t;
  auto rel = [&](double tt, const VehicleState& m) {
    const TargetKinematics k = target_state(tt, config.target);
    return std::pair<Eigen::Vector3d, Eigen::Vector3d>(
        k.position - m.position, k.velocity - m.velocity);
  };

  auto [p0, v0] = rel(t, missile);
  ClosestApproach best{p0.norm(), t};
  for (std::size_t j = 0; j < steps; ++j) {
    const Deflections d{s[first + j].deflection[0],
                        s[first + j].deflection[1]};
    const double t0 = s[first + j].t;
    for (int i = 0; i < substeps; ++i) {
      const double ta = t0 + i * h;
      missile = vehicle_step(missile, d, airframe, ta, h, config.environment);
      const double tb = t0 + (i + 1) * h;
      auto [p1, v1] = rel(tb, missile);
      const HermiteMin hm = minimize_hermite(p0, v0, p1, v1, h);
      if (hm.distance < best.distance) best = {hm.distance, ta + hm.s * h};
      p0 = p1;
      v0 = v1;
    }
  }
  return best;
}

}  // namespace pgs
