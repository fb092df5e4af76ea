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

// Simulation configuration: documented defaults, overlaid by a JSON file,
// overlaid by dotted-key overrides ("observer.epsilon=0.05").
//
// Schema (every key optional; unknown keys are rejected):
//
//   seed                         unsigned integer
//   observer.k1 .. k4            numbers, must form a Hurwitz polynomial
//   observer.epsilon             number > 0
//   observer.delta               number >= 0, or "auto" (= seeker lag)
//   observer.paper_literal_step1 bool
//   seeker.lag_time_constant     number >= 0
//   guidance.nav_ratio           number > 0
//   guidance.source              "true" | "delayed" | "predicted"
//   guidance.warmup              number >= 0
//   autopilot.actuator_time_constant, autopilot.deflection_limit
//   target.kind                  "level" | "weaving"
//   target.position              [x, y, z]
//   target.speed, target.weave_amplitude, target.weave_frequency
//   target.phase                 number, or "auto" (drawn from seed)
//   engagement.dt, engagement.max_time
//   engagement.launch_speed, engagement.launch_elevation
//   engagement.airframe          "builtin" or a dataset path (relative
//                                paths resolve against the config file)
//   sweep.delays                 [numbers], ascending
//   sweep.samples_per_delay      integer >= 1
//   sweep.sources                ["delayed", "predicted"]

#ifndef PGS_CONFIG_HPP_
#define PGS_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "pgs/engagement.hpp"
#include "pgs/montecarlo.hpp"

namespace pgs {

struct SimulationConfig {
  std::uint64_t seed = 0;
  EngagementConfig engagement;
  SweepConfig sweep;
  // As written by the user, kept for the echo.
  bool delta_auto = true;
  bool phase_auto = false;
  std::string airframe = "builtin";
};

// Pretty-printed JSON of the documented defaults.
std::string default_config_json();

// defaults <- file_text (may be empty) <- overrides <- seed_override.
// `base_dir` anchors relative airframe paths. Throws ConfigError carrying
// every violation found.
SimulationConfig resolve_config(std::string_view file_text,
                                std::span<const std::string> overrides,
                                std::optional<std::uint64_t> seed_override,
                                const std::filesystem::path& base_dir = {});

// Same, reading the file when `path` is set.
SimulationConfig load_config(const std::optional<std::filesystem::path>& path,
                             std::span<const std::string> overrides,
                             std::optional<std::uint64_t> seed_override);

// Fully resolved configuration as JSON; "auto" values appear as the numbers
// they resolved to, so feeding this back reproduces the run.
std::string to_json(const SimulationConfig& config, int indent = 2);

}  // namespace pgs

#endif  // PGS_CONFIG_HPP_
