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

#include "pgs/airframe.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "pgs/error.hpp"
#include "pgs/rk4.hpp"

namespace pgs {
namespace {

using Vec11 = Eigen::Matrix<double, 11, 1>;

Vec11 pack(const VehicleState& s) {
  Vec11 x;
  x << s.position, s.velocity, s.pitch, s.yaw, s.pitch_rate, s.yaw_rate,
      s.mass;
  return x;
}

VehicleState unpack(const Vec11& x) {
  VehicleState s;
  s.position = x.segment<3>(0);
  s.velocity = x.segment<3>(3);
  s.pitch = x[6];
  s.yaw = x[7];
  s.pitch_rate = x[8];
  s.yaw_rate = x[9];
  s.mass = x[10];
  return s;
}

AeroRow lerp(const AeroRow& a, const AeroRow& b, double w, double mach) {
  auto mix = [w](double x, double y) { return x + w * (y - x); };
  AeroRow r;
  r.mach = mach;
  r.cn_alpha = mix(a.cn_alpha, b.cn_alpha);
  r.ca0 = mix(a.ca0, b.ca0);
  r.cm_alpha = mix(a.cm_alpha, b.cm_alpha);
  r.cm_q = mix(a.cm_q, b.cm_q);
  r.cn_delta = mix(a.cn_delta, b.cn_delta);
  r.cm_delta = mix(a.cm_delta, b.cm_delta);
  return r;
}

}  // namespace

AeroTable::AeroTable(std::vector<AeroRow> rows, double reference_area,
                     double reference_length)
    : rows_(std::move(rows)),
      reference_area_(reference_area),
      reference_length_(reference_length) {
  if (rows_.size() < 2) {
    throw InvalidArgument("aero table needs at least two Mach breakpoints");
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& r = rows_[i];
    if (!(r.mach > 0.0)) {
      throw InvalidArgument("aero table Mach breakpoints must be positive");
    }
    if (i > 0 && !(r.mach > rows_[i - 1].mach)) {
      throw InvalidArgument(
          "aero table Mach breakpoints must be strictly ascending");
    }
    if (!(r.cm_alpha < 0.0)) {
      throw InvalidArgument("aero table cm_alpha must be negative (statically "
                            "stable) at Mach " +
                            std::to_string(r.mach));
    }
  }
  if (!(reference_area_ > 0.0 && reference_length_ > 0.0)) {
    throw InvalidArgument("aero reference area and length must be positive");
  }
}

AeroRow AeroTable::interpolate(double mach) const {
  if (mach <= rows_.front().mach) return rows_.front();
  if (mach >= rows_.back().mach) return rows_.back();
  auto hi = std::upper_bound(
      rows_.begin(), rows_.end(), mach,
      [](double m, const AeroRow& r) { return m < r.mach; });
  auto lo = hi - 1;
  if (lo->mach == mach) return *lo;
  const double w = (mach - lo->mach) / (hi->mach - lo->mach);
  return lerp(*lo, *hi, w, mach);
}

AeroCoefficients aero_coefficients(const AeroTable& table, double mach,
                                   double aoa) {
  if (!(mach > 0.0)) {
    throw InvalidArgument("aero_coefficients: Mach must be > 0");
  }
  AeroCoefficients c;
  c.row = table.interpolate(mach);
  c.cn = c.row.cn_alpha * aoa;
  c.ca = c.row.ca0;
  c.cm = c.row.cm_alpha * aoa;
  return c;
}

ThrustProfile::ThrustProfile(std::vector<double> times,
                             std::vector<double> thrusts, double launch_mass,
                             double propellant_mass)
    : times_(std::move(times)),
      thrusts_(std::move(thrusts)),
      launch_mass_(launch_mass),
      propellant_mass_(propellant_mass) {
  if (times_.size() < 2 || times_.size() != thrusts_.size()) {
    throw InvalidArgument(
        "thrust profile needs at least two (time, thrust) rows");
  }
  for (std::size_t i = 0; i < times_.size(); ++i) {
    if (i > 0 && !(times_[i] > times_[i - 1])) {
      throw InvalidArgument("thrust profile times must be strictly ascending");
    }
    if (!(thrusts_[i] >= 0.0)) {
      throw InvalidArgument("thrust profile values must be >= 0");
    }
  }
  if (times_.front() < 0.0) {
    throw InvalidArgument("thrust profile must start at t >= 0");
  }
  if (!(launch_mass_ > 0.0) || !(propellant_mass_ >= 0.0) ||
      !(propellant_mass_ < launch_mass_)) {
    throw InvalidArgument(
        "need launch_mass > 0 and 0 <= propellant_mass < launch_mass");
  }
  cumulative_.assign(times_.size(), 0.0);
  for (std::size_t i = 1; i < times_.size(); ++i) {
    cumulative_[i] = cumulative_[i - 1] + 0.5 * (thrusts_[i] + thrusts_[i - 1]) *
                                              (times_[i] - times_[i - 1]);
  }
  total_impulse_ = cumulative_.back();
  if (propellant_mass_ > 0.0 && !(total_impulse_ > 0.0)) {
    throw InvalidArgument("propellant with zero total impulse");
  }
}

double ThrustProfile::thrust(double t) const {
  if (t < times_.front() || t > times_.back()) return 0.0;
  auto hi = std::upper_bound(times_.begin(), times_.end(), t);
  if (hi == times_.end()) return thrusts_.back();
  const std::size_t i = static_cast<std::size_t>(hi - times_.begin());
  const double w = (t - times_[i - 1]) / (times_[i] - times_[i - 1]);
  return thrusts_[i - 1] + w * (thrusts_[i] - thrusts_[i - 1]);
}

double ThrustProfile::impulse(double t) const {
  if (t <= times_.front()) return 0.0;
  if (t >= times_.back()) return total_impulse_;
  auto hi = std::upper_bound(times_.begin(), times_.end(), t);
  const std::size_t i = static_cast<std::size_t>(hi - times_.begin());
  const double f = thrust(t);
  return cumulative_[i - 1] + 0.5 * (thrusts_[i - 1] + f) * (t - times_[i - 1]);
}

double ThrustProfile::mass(double t) const {
  if (propellant_mass_ == 0.0) return launch_mass_;
  if (t >= times_.back()) return launch_mass_ - propellant_mass_;
  return launch_mass_ - propellant_mass_ * (impulse(t) / total_impulse_);
}

double ThrustProfile::mass_rate(double t) const {
  if (propellant_mass_ == 0.0) return 0.0;
  return -thrust(t) * propellant_mass_ / total_impulse_;
}

BodyAxes body_axes(double pitch, double yaw) {
  const double cp = std::cos(pitch), sp = std::sin(pitch);
  const double cy = std::cos(yaw), sy = std::sin(yaw);
  return {Eigen::Vector3d(cp * cy, cp * sy, sp),
          Eigen::Vector3d(-sy, cy, 0.0),
          Eigen::Vector3d(-sp * cy, -sp * sy, cp)};
}

Incidence incidence(const VehicleState& state) {
  const BodyAxes b = body_axes(state.pitch, state.yaw);
  const double u = state.velocity.dot(b.x);
  const double v = state.velocity.dot(b.y);
  const double w = state.velocity.dot(b.z);
  return {std::atan2(-w, u), std::atan2(-v, u)};
}

ForcesMoments forces_and_moments(const VehicleState& state,
                                 const Deflections& deflections,
                                 const AeroTable& table, double thrust,
                                 const AtmosphereSample& atm) {
  const double speed = state.velocity.norm();
  if (!(speed > 0.0)) {
    throw InvalidArgument(
        "forces_and_moments: zero airspeed, incidence undefined");
  }
  const BodyAxes b = body_axes(state.pitch, state.yaw);
  const Incidence inc = incidence(state);
  const double mach = speed / atm.speed_of_sound;
  const AeroRow c = table.interpolate(mach);

  const double qbar = 0.5 * atm.density * speed * speed;
  const double qs = qbar * table.reference_area();
  const double d = table.reference_length();
  const double rate_scale = d / (2.0 * speed);

  const double normal = qs * (c.cn_alpha * inc.alpha + c.cn_delta * deflections.pitch);
  const double side = qs * (c.cn_alpha * inc.beta + c.cn_delta * deflections.yaw);
  const double axial = thrust - qs * c.ca0;

  ForcesMoments fm;
  fm.force = axial * b.x + side * b.y + normal * b.z;
  fm.force.z() -= state.mass * kStandardGravity;
  fm.pitch_moment = qs * d *
                    (c.cm_alpha * inc.alpha +
                     c.cm_q * state.pitch_rate * rate_scale +
                     c.cm_delta * deflections.pitch);
  fm.yaw_moment = qs * d *
                  (c.cm_alpha * inc.beta + c.cm_q * state.yaw_rate * rate_scale +
                   c.cm_delta * deflections.yaw);
  return fm;
}

AtmosphereSample environment_atmosphere(const Environment& env,
                                        double altitude) {
  AtmosphereSample atm = atmosphere(altitude);
  if (env.density_override) atm.density = *env.density_override;
  return atm;
}

VehicleDerivative vehicle_rhs(const VehicleState& state,
                              const Deflections& deflections,
                              const Airframe& airframe, double t,
                              const Environment& env) {
  const AtmosphereSample atm = environment_atmosphere(env, state.position.z());
  const double thrust = airframe.thrust.thrust(t);
  const ForcesMoments fm =
      forces_and_moments(state, deflections, airframe.aero, thrust, atm);

  VehicleDerivative d;
  d.position = state.velocity;
  d.velocity = fm.force / state.mass;
  d.pitch = state.pitch_rate;
  d.yaw = state.yaw_rate;
  d.pitch_rate = fm.pitch_moment / airframe.transverse_inertia;
  d.yaw_rate = fm.yaw_moment / airframe.transverse_inertia;
  d.mass = airframe.thrust.mass_rate(t);
  return d;
}

VehicleState vehicle_step(const VehicleState& state,
                          const Deflections& deflections,
                          const Airframe& airframe, double t, double dt,
                          const Environment& env) {
  const Vec11 x = rk4_step(
      [&](double tt, const Vec11& y) -> Vec11 {
        return pack(vehicle_rhs(unpack(y), deflections, airframe, tt, env));
      },
      t, pack(state), dt);
  VehicleState next = unpack(x);
  next.mass = airframe.thrust.mass(t + dt);
  return next;
}

double trim_acceleration_per_deflection(const VehicleState& state,
                                        const Airframe& airframe,
                                        const Environment& env) {
  const AtmosphereSample atm = environment_atmosphere(env, state.position.z());
  const double speed = state.velocity.norm();
  const AeroRow c =
      airframe.aero.interpolate(std::max(speed / atm.speed_of_sound, 1e-6));
  const double qs =
      0.5 * atm.density * speed * speed * airframe.aero.reference_area();
  return qs * (c.cn_alpha * c.cm_delta / -c.cm_alpha + c.cn_delta) / state.mass;
}

bool is_finite(const VehicleState& s) {
  return s.position.allFinite() && s.velocity.allFinite() &&
         std::isfinite(s.pitch) && std::isfinite(s.yaw) &&
         std::isfinite(s.pitch_rate) && std::isfinite(s.yaw_rate) &&
         std::isfinite(s.mass);
}

}  // namespace pgs
