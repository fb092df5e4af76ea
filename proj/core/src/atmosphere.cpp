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

#include <array>
#include <cmath>
#include <string>

#include "pgs/airframe.hpp"
#include "pgs/error.hpp"

namespace pgs {
namespace {

constexpr double kGasConstant = 287.05287;  // J/(kg K)
constexpr double kGamma = 1.4;

struct Layer {
  double base_altitude;     // m
  double base_temperature;  // K
  double base_pressure;     // Pa
  double lapse_rate;        // K/m
};

double layer_pressure(const Layer& l, double dh) {
  const double t = l.base_temperature + l.lapse_rate * dh;
  if (l.lapse_rate == 0.0) {
    return l.base_pressure *
           std::exp(-kStandardGravity * dh / (kGasConstant * t));
  }
  return l.base_pressure *
         std::pow(t / l.base_temperature,
                  -kStandardGravity / (kGasConstant * l.lapse_rate));
}

// Base pressures are carried up from 101325 Pa so the profile is
// continuous at every join.
std::array<Layer, 4> make_layers() {
  std::array<Layer, 4> l = {{
      {0.0, 288.15, 101325.0, -0.0065},
      {11000.0, 0.0, 0.0, 0.0},
      {20000.0, 0.0, 0.0, 0.001},
      {32000.0, 0.0, 0.0, 0.0028},
  }};
  for (std::size_t i = 1; i < l.size(); ++i) {
    const double dh = l[i].base_altitude - l[i - 1].base_altitude;
    l[i].base_temperature = l[i - 1].base_temperature + l[i - 1].lapse_rate * dh;
    l[i].base_pressure = layer_pressure(l[i - 1], dh);
  }
  return l;
}

const std::array<Layer, 4> kLayers = make_layers();

}  // namespace

AtmosphereSample atmosphere(double altitude) {
  if (std::isnan(altitude)) {
    throw InvalidArgument("atmosphere: altitude is NaN");
  }
  if (altitude > kAtmosphereCeiling) {
    throw InvalidArgument("atmosphere: altitude " + std::to_string(altitude) +
                          " m is above the 47 km model ceiling");
  }
  const double h = altitude < 0.0 ? 0.0 : altitude;

  const Layer* layer = &kLayers[0];
  for (const auto& l : kLayers) {
    if (h >= l.base_altitude) layer = &l;
  }
  const double dh = h - layer->base_altitude;
  const double t = layer->base_temperature + layer->lapse_rate * dh;
  const double p = layer_pressure(*layer, dh);

  AtmosphereSample s;
  s.temperature = t;
  s.pressure = p;
  s.density = p / (kGasConstant * t);
  s.speed_of_sound = std::sqrt(kGamma * kGasConstant * t);
  return s;
}

}  // namespace pgs
