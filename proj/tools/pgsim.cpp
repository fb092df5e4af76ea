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

// pgsim: run one engagement, a delay sweep, validate a configuration, or
// print the three-scenario comparison.
//
// Exit codes: 0 success, 2 invalid configuration, 3 divergence in `run`.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pgs/config.hpp"
#include "pgs/engagement.hpp"
#include "pgs/error.hpp"
#include "pgs/io.hpp"
#include "pgs/metrics.hpp"
#include "pgs/montecarlo.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitDiverged = 3;

struct Options {
  std::string config;
  std::vector<std::string> overrides;
  std::string out = ".";
  unsigned jobs = 0;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config, "JSON configuration file")
      ->check(CLI::ExistingFile);
  cmd->add_option("--set", o.overrides, "Override, e.g. observer.epsilon=0.05")
      ->allow_extra_args(false);
  cmd->add_option("--seed", o.seed, "Master seed (overrides PGS_SEED)");
}

std::optional<std::uint64_t> env_seed() {
  const char* s = std::getenv("PGS_SEED");
  if (s == nullptr || *s == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used == std::string(s).size()) return v;
  } catch (const std::exception&) {
  }
  throw pgs::ConfigError({"invalid value for PGS_SEED: expected an unsigned integer"});
}

pgs::SimulationConfig resolve(const Options& o) {
  std::optional<std::uint64_t> seed = o.seed ? o.seed : env_seed();
  std::optional<std::filesystem::path> path;
  if (!o.config.empty()) path = o.config;
  return pgs::load_config(path, o.overrides, seed);
}

std::filesystem::path prepare_out(const std::string& dir) {
  std::filesystem::path p(dir);
  std::filesystem::create_directories(p);
  return p;
}

void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p);
  if (!f) throw pgs::Error("cannot write " + p.string());
  f << text << '\n';
}

std::string fmt(double x, const char* spec = "%.4g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, x);
  return buf;
}

int cmd_validate(const Options& o) {
  const pgs::SimulationConfig c = resolve(o);
  std::cout << pgs::to_json(c) << '\n';
  return kExitOk;
}

int cmd_run(const Options& o) {
  const pgs::SimulationConfig c = resolve(o);
  const pgs::EngagementRecord rec = pgs::run_engagement(c.engagement);
  const auto dir = prepare_out(o.out);
  {
    std::ofstream f(dir / "engagement.csv");
    pgs::write_engagement_csv(f, rec);
  }
  pgs::MetricsReport m;
  if (!rec.samples.empty()) m = pgs::compute_metrics(rec, c.engagement);
  m.miss_distance = rec.miss_distance;
  m.miss_time = rec.miss_time;
  write_text(dir / "metrics.json", pgs::metrics_json(m, rec, c));

  std::cout << "termination: " << pgs::to_string(rec.termination) << '\n'
            << "miss distance: " << fmt(rec.miss_distance) << " m at t = "
            << fmt(rec.miss_time) << " s\n";
  if (!rec.diagnostic.empty()) std::cout << "diagnostic: " << rec.diagnostic << '\n';
  if (rec.incidence_warnings > 0) {
    std::cerr << "warning: incidence exceeded 25 deg on "
              << rec.incidence_warnings << " samples\n";
  }
  return rec.termination == pgs::Termination::kObserverDivergence
             ? kExitDiverged
             : kExitOk;
}

int cmd_sweep(const Options& o) {
  pgs::SimulationConfig c = resolve(o);
  c.sweep.jobs = o.jobs;
  const pgs::SweepSummary s = pgs::run_sweep(c.sweep, c.engagement);
  const auto dir = prepare_out(o.out);
  write_text(dir / "sweep_summary.json", pgs::sweep_summary_json(s, c));
  {
    std::ofstream f(dir / "sweep_runs.csv");
    pgs::write_sweep_runs_csv(f, s);
  }
  {
    std::ofstream f(dir / "plotdata.csv");
    pgs::write_plotdata_csv(f, s);
  }
  for (const auto& w : s.warnings) std::cerr << "warning: " << w << '\n';
  std::printf("%8s  %-10s %10s %10s %4s %5s\n", "delay", "source", "mean_miss",
              "std_miss", "n", "fail");
  for (const auto& g : s.groups) {
    std::printf("%8.4f  %-10s %10.4f %10.4f %4zu %5zu\n", g.delay,
                std::string(pgs::to_string(g.source)).c_str(), g.mean_miss,
                g.std_miss, g.n, g.failure_count);
  }
  return kExitOk;
}

int cmd_demo(const Options& o) {
  const pgs::SimulationConfig c = resolve(o);
  const double lag = c.engagement.seeker.lag_time_constant > 0.0
                         ? c.engagement.seeker.lag_time_constant
                         : 0.2;
  const auto& base = c.engagement;

  struct Row {
    const char* name;
    pgs::LosSource source;
    double lag;
  };
  const Row rows[] = {{"zero delay", pgs::LosSource::kTrue, 0.0},
                      {"delayed", pgs::LosSource::kDelayed, lag},
                      {"corrected", pgs::LosSource::kPredicted, lag}};

  std::printf("%-11s %-10s %6s %12s %12s  %s\n", "scenario", "source", "lag",
              "los_rmse", "miss_m", "termination");
  for (const Row& r : rows) {
    pgs::EngagementConfig e = base;
    e.seeker.lag_time_constant = r.lag;
    const double delta =
        c.delta_auto ? r.lag
                     : (r.lag == 0.0 ? 0.0 : base.observer.delta());
    e.observer = pgs::ObserverConfig(base.observer.gains(),
                                     base.observer.epsilon(), delta,
                                     base.observer.paper_literal_step1());
    e.guidance.source = r.source;
    const pgs::EngagementRecord rec = pgs::run_engagement(e);
    std::string rmse = "-";
    if (!rec.samples.empty()) {
      const pgs::MetricsReport m = pgs::compute_metrics(rec, e);
      std::optional<double> v;
      if (r.source == pgs::LosSource::kTrue) v = 0.0;
      if (r.source == pgs::LosSource::kDelayed) v = m.rmse_delayed;
      if (r.source == pgs::LosSource::kPredicted) v = m.rmse_predicted;
      if (v) rmse = fmt(*v, "%.3e");
    }
    std::printf("%-11s %-10s %6.3f %12s %12.4f  %s\n", r.name,
                std::string(pgs::to_string(r.source)).c_str(), r.lag,
                rmse.c_str(), rec.miss_distance,
                std::string(pgs::to_string(rec.termination)).c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pgsim: missile engagement simulator with delay-compensating "
               "LOS-rate observer"};
  app.require_subcommand(1);
  Options o;

  auto* run = app.add_subcommand("run", "Run one engagement");
  auto* sweep = app.add_subcommand("sweep", "Run the seeker-delay sweep");
  auto* validate = app.add_subcommand("validate",
                                      "Check a configuration and print it resolved");
  auto* demo = app.add_subcommand("demo", "Zero-delay / delayed / corrected table");
  for (auto* cmd : {run, sweep, validate, demo}) add_common(cmd, o);
  for (auto* cmd : {run, sweep}) {
    cmd->add_option("--out", o.out, "Output directory");
  }
  sweep->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(o);
    if (*sweep) return cmd_sweep(o);
    if (*validate) return cmd_validate(o);
    if (*demo) return cmd_demo(o);
  } catch (const pgs::ConfigError& e) {
    std::cerr << e.what() << '\n';
    return kExitInvalid;
  } catch (const pgs::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
