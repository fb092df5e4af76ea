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

#include "pgs/io.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <vector>

#include "json.hpp"

namespace pgs {
namespace {

using nlohmann::json;

json optional_number(const std::optional<double>& x) {
  return x ? json(*x) : json(nullptr);
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_engagement_csv(std::ostream& out, const EngagementRecord& record) {
  out << "t,lam_true_p,lam_true_y,lam_del_p,lam_del_y,lam_pred_p,lam_pred_y,"
         "acc_cmd_p,acc_cmd_y,defl_p,defl_y,mx,my,mz,tx,ty,tz,range\n";
  for (const Sample& s : record.samples) {
    const double cols[] = {s.t,
                           s.los_true[0], s.los_true[1],
                           s.los_delayed[0], s.los_delayed[1],
                           s.los_predicted[0], s.los_predicted[1],
                           s.accel_cmd[0], s.accel_cmd[1],
                           s.deflection[0], s.deflection[1],
                           s.missile.position.x(), s.missile.position.y(),
                           s.missile.position.z(),
                           s.target.position.x(), s.target.position.y(),
                           s.target.position.z(),
                           s.range};
    bool first = true;
    for (double c : cols) {
      if (!first) out << ',';
      out << format_double(c);
      first = false;
    }
    out << '\n';
  }
}

std::string metrics_json(const MetricsReport& m, const EngagementRecord& record,
                         const SimulationConfig& config) {
  json j;
  j["termination_reason"] = to_string(record.termination);
  j["diagnostic"] = record.diagnostic;
  j["miss_distance"] = m.miss_distance;
  j["miss_time"] = m.miss_time;
  j["los_rmse"] = {{"delayed", optional_number(m.rmse_delayed)},
                   {"predicted", optional_number(m.rmse_predicted)},
                   {"delayed_full", optional_number(m.rmse_delayed_full)},
                   {"predicted_full", optional_number(m.rmse_predicted_full)}};
  j["peak_accel_cmd"] = m.peak_accel_cmd;
  j["integrated_abs_deflection"] = m.integrated_abs_deflection;
  j["source_switch_time"] = optional_number(record.source_switch_time);
  j["max_incidence"] = record.max_incidence;
  j["incidence_warnings"] = record.incidence_warnings;
  j["samples"] = record.samples.size();
  j["seed"] = config.seed;
  j["config"] = json::parse(to_json(config));
  return j.dump(2);
}

void write_sweep_runs_csv(std::ostream& out, const SweepSummary& summary) {
  out << "delay,source,sample,seed,miss,rmse,peak_accel,termination\n";
  for (const SweepRun& r : summary.runs) {
    out << format_double(r.delay) << ',' << to_string(r.source) << ','
        << r.sample << ',' << r.seed << ',' << format_double(r.miss) << ','
        << (r.rmse ? format_double(*r.rmse) : std::string()) << ','
        << format_double(r.peak_accel) << ',' << to_string(r.termination)
        << '\n';
  }
}

std::string sweep_summary_json(const SweepSummary& summary,
                               const SimulationConfig& config) {
  json groups = json::array();
  for (const SweepGroup& g : summary.groups) {
    groups.push_back({{"delay", g.delay},
                      {"source", to_string(g.source)},
                      {"mean_miss", g.mean_miss},
                      {"std_miss", g.std_miss},
                      {"n", g.n},
                      {"failure_count", g.failure_count}});
  }
  json j;
  j["groups"] = groups;
  j["std_kind"] = "population";
  j["pairing"] = "target phase keyed by sample index, shared across delays "
                 "and sources";
  j["runs"] = summary.runs.size();
  j["warnings"] = summary.warnings;
  j["seed"] = config.seed;
  j["config"] = json::parse(to_json(config));
  return j.dump(2);
}

void write_plotdata_csv(std::ostream& out, const SweepSummary& summary) {
  std::vector<double> delays;
  std::vector<LosSource> sources;
  for (const SweepRun& r : summary.runs) {
    if (std::find(delays.begin(), delays.end(), r.delay) == delays.end()) {
      delays.push_back(r.delay);
    }
    if (std::find(sources.begin(), sources.end(), r.source) == sources.end()) {
      sources.push_back(r.source);
    }
  }
  std::sort(delays.begin(), delays.end());
  std::sort(sources.begin(), sources.end());

  out << "delay";
  for (LosSource s : sources) {
    const std::string n(to_string(s));
    out << ',' << n << "_mean," << n << "_lo," << n << "_hi";
  }
  out << '\n';
  for (double d : delays) {
    out << format_double(d);
    for (LosSource s : sources) {
      auto it = std::find_if(
          summary.groups.begin(), summary.groups.end(),
          [&](const SweepGroup& g) { return g.delay == d && g.source == s; });
      if (it == summary.groups.end()) {
        out << ",,,";
      } else {
        out << ',' << format_double(it->mean_miss) << ','
            << format_double(it->mean_miss - it->std_miss) << ','
            << format_double(it->mean_miss + it->std_miss);
      }
    }
    out << '\n';
  }
}

}  // namespace pgs
