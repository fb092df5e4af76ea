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

#include "pgs/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pgs/error.hpp"
#include "pgs/random.hpp"
#include "pgs/targets.hpp"

namespace pgs {
namespace {

using nlohmann::json;
using Violations = std::vector<std::string>;

json defaults_json() {
  const EngagementConfig e;
  const SweepConfig s;
  const ObserverGains g;
  json j;
  j["seed"] = 0;
  j["observer"] = {{"k1", g.k1},
                   {"k2", g.k2},
                   {"k3", g.k3},
                   {"k4", g.k4},
                   {"epsilon", e.observer.epsilon()},
                   {"delta", "auto"},
                   {"paper_literal_step1", false}};
  j["seeker"] = {{"lag_time_constant", e.seeker.lag_time_constant}};
  j["guidance"] = {{"nav_ratio", e.guidance.nav_ratio},
                   {"source", to_string(e.guidance.source)},
                   {"warmup", e.guidance.warmup}};
  j["autopilot"] = {
      {"actuator_time_constant", e.autopilot.actuator_time_constant},
      {"deflection_limit", e.autopilot.deflection_limit}};
  const auto& p = e.target.initial_position;
  j["target"] = {{"kind", "level"},
                 {"position", {p.x(), p.y(), p.z()}},
                 {"speed", e.target.speed},
                 {"weave_amplitude", e.target.weave_amplitude},
                 {"weave_frequency", e.target.weave_frequency},
                 {"phase", e.target.phase}};
  j["engagement"] = {{"dt", e.dt},
                     {"max_time", e.max_time},
                     {"launch_speed", e.launch.speed},
                     {"launch_elevation", e.launch.elevation},
                     {"airframe", "builtin"}};
  json sources = json::array();
  for (LosSource src : s.sources) sources.push_back(to_string(src));
  j["sweep"] = {{"delays", s.delays},
                {"samples_per_delay", s.samples_per_delay},
                {"sources", sources}};
  return j;
}

// Overlays src onto dst; keys absent from dst are errors.
void merge(json& dst, const json& src, const std::string& prefix,
           Violations& errs) {
  if (!src.is_object()) {
    errs.push_back("invalid value for '" + (prefix.empty() ? "<root>" : prefix) +
                   "': expected an object");
    return;
  }
  for (const auto& [key, value] : src.items()) {
    const std::string path = prefix.empty() ? key : prefix + "." + key;
    if (!dst.contains(key)) {
      errs.push_back("unknown key '" + path + "'");
    } else if (dst[key].is_object()) {
      merge(dst[key], value, path, errs);
    } else {
      dst[key] = value;
    }
  }
}

void apply_override(json& doc, const std::string& item, Violations& errs) {
  const auto eq = item.find('=');
  if (eq == std::string::npos || eq == 0) {
    errs.push_back("invalid override '" + item + "': expected KEY=VALUE");
    return;
  }
  const std::string key = item.substr(0, eq);
  const std::string text = item.substr(eq + 1);
  json* node = &doc;
  std::size_t start = 0;
  for (;;) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot - start);
    if (!node->is_object() || !node->contains(part)) {
      errs.push_back("unknown key '" + key + "'");
      return;
    }
    node = &(*node)[part];
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  if (node->is_object()) {
    errs.push_back("invalid override '" + item + "': '" + key +
                   "' is a section, not a value");
    return;
  }
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;  // bare word, e.g. source=delayed
  *node = std::move(value);
}

// Typed readers. Each records a violation and returns a fallback on error.
class Reader {
 public:
  Reader(const json& doc, Violations& errs) : doc_(doc), errs_(errs) {}

  const json& at(const char* section, const char* key) const {
    return doc_.at(section).at(key);
  }

  double number(const char* section, const char* key, double fallback) {
    const json& v = at(section, key);
    if (v.is_number()) return v.get<double>();
    bad(section, key, "expected a number");
    return fallback;
  }

  std::optional<double> number_or_auto(const char* section, const char* key) {
    const json& v = at(section, key);
    if (v.is_number()) return v.get<double>();
    if (v.is_string() && v.get<std::string>() == "auto") return std::nullopt;
    bad(section, key, "expected a number or \"auto\"");
    return 0.0;
  }

  bool boolean(const char* section, const char* key) {
    const json& v = at(section, key);
    if (v.is_boolean()) return v.get<bool>();
    bad(section, key, "expected true or false");
    return false;
  }

  std::string string(const char* section, const char* key) {
    const json& v = at(section, key);
    if (v.is_string()) return v.get<std::string>();
    bad(section, key, "expected a string");
    return {};
  }

  void bad(const char* section, const char* key, const std::string& why) {
    errs_.push_back(std::string("invalid value for '") + section + "." + key +
                    "': " + why);
  }

 private:
  const json& doc_;
  Violations& errs_;
};

SimulationConfig from_json(const json& doc, const std::filesystem::path& base,
                           Violations& errs) {
  SimulationConfig out;
  Reader r(doc, errs);

  const json& seed = doc.at("seed");
  if (seed.is_number_unsigned()) {
    out.seed = seed.get<std::uint64_t>();
  } else if (seed.is_number_integer() && seed.get<std::int64_t>() >= 0) {
    out.seed = static_cast<std::uint64_t>(seed.get<std::int64_t>());
  } else {
    errs.push_back("invalid value for 'seed': expected an unsigned integer");
  }

  EngagementConfig& e = out.engagement;

  // Observer: the gate order matters because ObserverConfig refuses to
  // exist with bad gains, and dt is checked against its epsilon.
  ObserverGains g{r.number("observer", "k1", 4.0),
                  r.number("observer", "k2", 6.0),
                  r.number("observer", "k3", 4.0),
                  r.number("observer", "k4", 1.0)};
  const double eps = r.number("observer", "epsilon", 0.05);
  const std::optional<double> delta = r.number_or_auto("observer", "delta");
  const bool literal = r.boolean("observer", "paper_literal_step1");
  e.seeker.lag_time_constant = r.number("seeker", "lag_time_constant", 0.2);
  out.delta_auto = !delta.has_value();
  const double d = delta.value_or(e.seeker.lag_time_constant);

  bool observer_ok = true;
  if (!validate_gains(g)) {
    errs.push_back(
        "observer gains k1..k4 fail the Hurwitz test: s^4 + k1 s^3 + k2 s^2 "
        "+ k3 s + k4 must have all roots in the open left half-plane");
    observer_ok = false;
  }
  if (!(std::isfinite(eps) && eps > 0.0)) {
    errs.push_back("invalid value for 'observer.epsilon': must be > 0");
    observer_ok = false;
  }
  if (!(std::isfinite(d) && d >= 0.0)) {
    errs.push_back("invalid value for 'observer.delta': must be >= 0");
    observer_ok = false;
  }
  if (observer_ok) {
    e.observer = ObserverConfig(g, eps, d, literal);
  } else if (std::isfinite(eps) && eps > 0.0) {
    // Keep epsilon so the dt gate below still reports against it.
    e.observer = ObserverConfig(ObserverGains{}, eps, 0.0);
  }

  e.guidance.nav_ratio = r.number("guidance", "nav_ratio", 4.0);
  const std::string src = r.string("guidance", "source");
  if (auto s = parse_los_source(src)) {
    e.guidance.source = *s;
  } else if (doc.at("guidance").at("source").is_string()) {
    r.bad("guidance", "source",
          "'" + src + "' is not one of true, delayed, predicted");
  }
  e.guidance.warmup = r.number("guidance", "warmup", 2.0);

  e.autopilot.actuator_time_constant =
      r.number("autopilot", "actuator_time_constant", 0.02);
  e.autopilot.deflection_limit = r.number("autopilot", "deflection_limit", 0.52);

  const std::string kind = r.string("target", "kind");
  if (kind == "level") {
    e.target.kind = TargetKind::kLevel;
  } else if (kind == "weaving") {
    e.target.kind = TargetKind::kWeaving;
  } else if (doc.at("target").at("kind").is_string()) {
    r.bad("target", "kind", "'" + kind + "' is not one of level, weaving");
  }
  const json& pos = doc.at("target").at("position");
  if (pos.is_array() && pos.size() == 3 && pos[0].is_number() &&
      pos[1].is_number() && pos[2].is_number()) {
    e.target.initial_position = {pos[0].get<double>(), pos[1].get<double>(),
                                 pos[2].get<double>()};
  } else {
    r.bad("target", "position", "expected [x, y, z]");
  }
  e.target.speed = r.number("target", "speed", 200.0);
  e.target.weave_amplitude = r.number("target", "weave_amplitude", 5.0);
  e.target.weave_frequency = r.number("target", "weave_frequency", 3.0);
  const std::optional<double> phase = r.number_or_auto("target", "phase");
  out.phase_auto = !phase.has_value();
  e.target.phase = phase ? *phase : sample_phase(derive_seed(out.seed, 0));

  e.dt = r.number("engagement", "dt", 1e-3);
  e.max_time = r.number("engagement", "max_time", 60.0);
  e.launch.speed = r.number("engagement", "launch_speed", 20.0);
  e.launch.elevation = r.number("engagement", "launch_elevation", 0.785);
  out.airframe = r.string("engagement", "airframe");
  if (!out.airframe.empty() && out.airframe != "builtin") {
    std::filesystem::path p(out.airframe);
    if (p.is_relative() && !base.empty()) p = base / p;
    try {
      e.airframe = std::make_shared<const Airframe>(load_airframe(p));
      out.airframe = std::filesystem::absolute(p).lexically_normal().string();
    } catch (const Error& ex) {
      r.bad("engagement", "airframe", ex.what());
    }
  }

  SweepConfig& s = out.sweep;
  s.master_seed = out.seed;
  const json& delays = doc.at("sweep").at("delays");
  s.delays.clear();
  if (delays.is_array()) {
    for (const json& x : delays) {
      if (!x.is_number()) {
        r.bad("sweep", "delays", "expected an array of numbers");
        break;
      }
      s.delays.push_back(x.get<double>());
    }
  } else {
    r.bad("sweep", "delays", "expected an array of numbers");
  }
  const json& n = doc.at("sweep").at("samples_per_delay");
  if (n.is_number_integer() && n.get<std::int64_t>() >= 1) {
    s.samples_per_delay = n.get<std::size_t>();
  } else {
    r.bad("sweep", "samples_per_delay", "expected an integer >= 1");
  }
  const json& sources = doc.at("sweep").at("sources");
  s.sources.clear();
  bool sources_ok = sources.is_array();
  if (sources_ok) {
    for (const json& x : sources) {
      auto parsed = x.is_string() ? parse_los_source(x.get<std::string>())
                                  : std::nullopt;
      if (!parsed) {
        sources_ok = false;
        break;
      }
      s.sources.push_back(*parsed);
    }
  }
  if (!sources_ok) {
    r.bad("sweep", "sources", "expected an array of \"delayed\"/\"predicted\"");
  }

  for (auto& v : validate(e)) errs.push_back(std::move(v));
  if (delays.is_array() && sources_ok && n.is_number_integer()) {
    for (auto& v : validate(s)) errs.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::string default_config_json() { return defaults_json().dump(2); }

SimulationConfig resolve_config(std::string_view file_text,
                                std::span<const std::string> overrides,
                                std::optional<std::uint64_t> seed_override,
                                const std::filesystem::path& base_dir) {
  json doc = defaults_json();
  Violations errs;
  if (!file_text.empty()) {
    json file = json::parse(file_text, nullptr, false);
    if (file.is_discarded()) {
      throw ParseError("config file is not valid JSON");
    }
    merge(doc, file, "", errs);
  }
  for (const std::string& item : overrides) apply_override(doc, item, errs);
  if (seed_override) doc["seed"] = *seed_override;
  // Unknown keys make the rest of the report unreliable only for those
  // keys; keep going so the user sees everything at once.
  SimulationConfig out = from_json(doc, base_dir, errs);
  if (!errs.empty()) throw ConfigError(std::move(errs));
  return out;
}

SimulationConfig load_config(const std::optional<std::filesystem::path>& path,
                             std::span<const std::string> overrides,
                             std::optional<std::uint64_t> seed_override) {
  if (!path) return resolve_config({}, overrides, seed_override);
  std::ifstream in(*path);
  if (!in) throw ParseError("cannot open config file " + path->string());
  std::ostringstream text;
  text << in.rdbuf();
  const std::string body = text.str();
  if (body.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw ParseError("config file " + path->string() + " is empty");
  }
  return resolve_config(body, overrides, seed_override, path->parent_path());
}

std::string to_json(const SimulationConfig& c, int indent) {
  const EngagementConfig& e = c.engagement;
  const ObserverGains& g = e.observer.gains();
  json j;
  j["seed"] = c.seed;
  j["observer"] = {{"k1", g.k1},
                   {"k2", g.k2},
                   {"k3", g.k3},
                   {"k4", g.k4},
                   {"epsilon", e.observer.epsilon()},
                   {"delta", e.observer.delta()},
                   {"paper_literal_step1", e.observer.paper_literal_step1()}};
  j["seeker"] = {{"lag_time_constant", e.seeker.lag_time_constant}};
  j["guidance"] = {{"nav_ratio", e.guidance.nav_ratio},
                   {"source", to_string(e.guidance.source)},
                   {"warmup", e.guidance.warmup}};
  j["autopilot"] = {
      {"actuator_time_constant", e.autopilot.actuator_time_constant},
      {"deflection_limit", e.autopilot.deflection_limit}};
  const auto& p = e.target.initial_position;
  j["target"] = {
      {"kind", e.target.kind == TargetKind::kWeaving ? "weaving" : "level"},
      {"position", {p.x(), p.y(), p.z()}},
      {"speed", e.target.speed},
      {"weave_amplitude", e.target.weave_amplitude},
      {"weave_frequency", e.target.weave_frequency},
      {"phase", e.target.phase}};
  j["engagement"] = {{"dt", e.dt},
                     {"max_time", e.max_time},
                     {"launch_speed", e.launch.speed},
                     {"launch_elevation", e.launch.elevation},
                     {"airframe", c.airframe}};
  json sources = json::array();
  for (LosSource src : c.sweep.sources) sources.push_back(to_string(src));
  j["sweep"] = {{"delays", c.sweep.delays},
                {"samples_per_delay", c.sweep.samples_per_delay},
                {"sources", sources}};
  return j.dump(indent);
}

}  // namespace pgs
