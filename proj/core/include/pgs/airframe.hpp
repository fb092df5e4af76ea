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

// Five degree-of-freedom skid-to-turn missile model.
//
// Frames: inertial x north, y east, z up; the launch site is the origin.
// The body frame is reached from the inertial frame by a yaw rotation about
// z followed by a pitch rotation (nose up positive). Roll is fixed at zero.
//
//   x_b = ( cos(pitch) cos(yaw),  cos(pitch) sin(yaw), sin(pitch))
//   y_b = (-sin(yaw),             cos(yaw),            0         )
//   z_b = (-sin(pitch) cos(yaw), -sin(pitch) sin(yaw), cos(pitch))
//
// Pitch-plane incidence alpha is positive with the nose above the velocity
// vector and produces normal force along +z_b; yaw-plane incidence beta is
// positive with the nose toward +y_b and produces side force along +y_b.
// A positive fin deflection produces a positive (nose-up / nose-left)
// moment. The airframe is cruciform: both planes share one coefficient set.

#ifndef PGS_AIRFRAME_HPP_
#define PGS_AIRFRAME_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace pgs {

inline constexpr double kStandardGravity = 9.80665;

struct AtmosphereSample {
  double density = 0.0;         // kg/m^3
  double speed_of_sound = 0.0;  // m/s
  double temperature = 0.0;     // K
  double pressure = 0.0;        // Pa
};

inline constexpr double kAtmosphereCeiling = 47000.0;

// 1976 standard atmosphere, geopotential altitude, 0..47 km. Altitudes
// below zero are clamped to sea level; above the ceiling throws.
AtmosphereSample atmosphere(double altitude);

// Linear-in-incidence coefficients at one Mach breakpoint.
struct AeroRow {
  double mach = 0.0;
  double cn_alpha = 0.0;  // normal-force slope, 1/rad
  double ca0 = 0.0;       // axial force coefficient
  double cm_alpha = 0.0;  // moment slope, 1/rad
  double cm_q = 0.0;      // damping, per nondimensional rate q d / (2 V)
  double cn_delta = 0.0;  // fin normal-force effectiveness, 1/rad
  double cm_delta = 0.0;  // fin moment effectiveness, 1/rad

  bool operator==(const AeroRow&) const = default;
};

class AeroTable {
 public:
  // Throws InvalidArgument unless there are at least two rows with strictly
  // ascending Mach, cm_alpha < 0 everywhere, and positive reference values.
  AeroTable(std::vector<AeroRow> rows, double reference_area,
            double reference_length);

  const std::vector<AeroRow>& rows() const { return rows_; }
  double reference_area() const { return reference_area_; }
  double reference_length() const { return reference_length_; }

  // Row linearly interpolated in Mach, clamped at both ends.
  AeroRow interpolate(double mach) const;

 private:
  std::vector<AeroRow> rows_;
  double reference_area_;
  double reference_length_;
};

struct AeroCoefficients {
  double cn = 0.0;
  double ca = 0.0;
  double cm = 0.0;
  AeroRow row;  // the interpolated parameters the coefficients came from
};

// cn = cn_alpha aoa, ca = ca0, cm = cm_alpha aoa. Requires mach > 0.
AeroCoefficients aero_coefficients(const AeroTable& table, double mach,
                                   double aoa);

// Piecewise-linear thrust curve; propellant burns in proportion to impulse.
class ThrustProfile {
 public:
  ThrustProfile(std::vector<double> times, std::vector<double> thrusts,
                double launch_mass, double propellant_mass);

  double thrust(double t) const;
  // Impulse delivered on [0, t], exact for the piecewise-linear curve.
  double impulse(double t) const;
  double total_impulse() const { return total_impulse_; }
  double mass(double t) const;
  double mass_rate(double t) const;
  double burnout_time() const { return times_.back(); }
  double launch_mass() const { return launch_mass_; }
  double propellant_mass() const { return propellant_mass_; }
  const std::vector<double>& times() const { return times_; }
  const std::vector<double>& thrusts() const { return thrusts_; }

 private:
  std::vector<double> times_;
  std::vector<double> thrusts_;
  std::vector<double> cumulative_;
  double launch_mass_;
  double propellant_mass_;
  double total_impulse_;
};

struct Airframe {
  AeroTable aero;
  ThrustProfile thrust;
  double transverse_inertia;  // kg m^2, pitch and yaw
};

// Dataset text format, see core/data/generic_airframe.txt.
Airframe parse_airframe(std::string_view text);
Airframe load_airframe(const std::filesystem::path& path);
// Built-in generic dataset (same content as core/data/generic_airframe.txt).
const Airframe& default_airframe();
std::string_view default_airframe_text();

struct VehicleState {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Vector3d velocity = Eigen::Vector3d::Zero();
  double pitch = 0.0;
  double yaw = 0.0;
  double pitch_rate = 0.0;
  double yaw_rate = 0.0;
  double mass = 1.0;
};

// Time derivative of a VehicleState, same layout.
using VehicleDerivative = VehicleState;

struct Deflections {
  double pitch = 0.0;
  double yaw = 0.0;
};

struct BodyAxes {
  Eigen::Vector3d x;
  Eigen::Vector3d y;
  Eigen::Vector3d z;
};

BodyAxes body_axes(double pitch, double yaw);

struct Incidence {
  double alpha = 0.0;
  double beta = 0.0;
};

Incidence incidence(const VehicleState& state);

struct ForcesMoments {
  Eigen::Vector3d force = Eigen::Vector3d::Zero();  // inertial, incl. gravity
  double pitch_moment = 0.0;
  double yaw_moment = 0.0;
};

ForcesMoments forces_and_moments(const VehicleState& state,
                                 const Deflections& deflections,
                                 const AeroTable& table, double thrust,
                                 const AtmosphereSample& atm);

// Environment knobs for tests and studies.
struct Environment {
  std::optional<double> density_override;
};

AtmosphereSample environment_atmosphere(const Environment& env,
                                        double altitude);

VehicleDerivative vehicle_rhs(const VehicleState& state,
                              const Deflections& deflections,
                              const Airframe& airframe, double t,
                              const Environment& env = {});

// One RK4 step with deflections held. Mass is then set from the thrust
// profile's exact impulse integral so propellant accounting has no
// integration error.
VehicleState vehicle_step(const VehicleState& state,
                          const Deflections& deflections,
                          const Airframe& airframe, double t, double dt,
                          const Environment& env = {});

// Steady lateral acceleration per radian of fin deflection at moment trim,
// q S (cn_alpha * cm_delta / -cm_alpha + cn_delta) / m.
double trim_acceleration_per_deflection(const VehicleState& state,
                                        const Airframe& airframe,
                                        const Environment& env = {});

bool is_finite(const VehicleState& state);

}  // namespace pgs

#endif  // PGS_AIRFRAME_HPP_
