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

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "pgs/engagement.hpp"
#include "pgs/error.hpp"
#include "pgs/metrics.hpp"
#include "pgs/random.hpp"

namespace pgs {
namespace {

bool same(const Sample& a, const Sample& b) {
  return a.t == b.t && a.los_true == b.los_true && a.los_delayed == b.los_delayed &&
         a.los_predicted == b.los_predicted && a.accel_cmd == b.accel_cmd &&
         a.deflection == b.deflection && a.missile.position == b.missile.position &&
         a.missile.velocity == b.missile.velocity && a.missile.pitch == b.missile.pitch &&
         a.missile.yaw == b.missile.yaw && a.missile.mass == b.missile.mass &&
         a.target.position == b.target.position && a.range == b.range;
}

bool same(const EngagementRecord& a, const EngagementRecord& b) {
  if (a.samples.size() != b.samples.size()) return false;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    if (!same(a.samples[i], b.samples[i])) return false;
  }
  return a.miss_distance == b.miss_distance && a.termination == b.termination;
}

EngagementConfig with_lag(double lag, LosSource source) {
  EngagementConfig c;
  c.seeker.lag_time_constant = lag;
  c.observer = ObserverConfig(ObserverGains{}, 0.05, lag);
  c.guidance.source = source;
  return c;
}

// Missile on the x axis at speed 100, target fixed.
EngagementRecord line_record(const Eigen::Vector3d& target, double dt,
                             double x0, int n) {
  EngagementRecord r;
  r.dt = dt;
  for (int i = 0; i < n; ++i) {
    Sample s;
    s.t = i * dt;
    s.missile.position = {x0 + 100.0 * s.t, 0, 0};
    s.missile.velocity = {100.0, 0, 0};
    s.target.position = target;
    s.range = (target - s.missile.position).norm();
    r.samples.push_back(s);
  }
  return r;
}

TEST_SUITE("engagement") {

TEST_CASE("zero-lag engagement on the true rate hits") {
  const EngagementRecord r = run_engagement(with_lag(0.0, LosSource::kTrue));
  CHECK(r.termination == Termination::kClosestApproach);
  CHECK(r.miss_distance < 0.5);
  CHECK(r.diagnostic.empty());
}

TEST_CASE("forced timeout") {
  EngagementConfig c;
  c.max_time = 0.001;
  const EngagementRecord r = run_engagement(c);
  CHECK(r.termination == Termination::kTimeout);
  CHECK(r.samples.size() == 2);
  CHECK(to_string(r.termination) == "timeout");
}

TEST_CASE("launching into the ground") {
  EngagementConfig c;
  c.launch.elevation = -0.3;
  const EngagementRecord r = run_engagement(c);
  CHECK(r.termination == Termination::kGroundImpact);
}

TEST_CASE("runs are bit-for-bit repeatable") {
  EngagementConfig c = with_lag(0.2, LosSource::kPredicted);
  c.target.kind = TargetKind::kWeaving;
  c.target.phase = 1.234;
  CHECK(same(run_engagement(c), run_engagement(c)));
}

TEST_CASE("invalid configurations are rejected with every violation") {
  EngagementConfig c;
  c.dt = 0.05;
  c.max_time = -1;
  c.autopilot.deflection_limit = 0;
  try {
    run_engagement(c);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.violations().size() == 3);
  }
}

TEST_CASE("record integrity, saturation and the logged handoff") {
  EngagementConfig c = with_lag(0.2, LosSource::kPredicted);
  c.target.kind = TargetKind::kWeaving;
  const EngagementRecord r = run_engagement(c);
  REQUIRE(r.samples.size() > 2);
  for (std::size_t i = 1; i < r.samples.size(); ++i) {
    CHECK(r.samples[i].t > r.samples[i - 1].t);
  }
  for (const Sample& s : r.samples) {
    CHECK(std::abs(s.deflection[0]) <= c.autopilot.deflection_limit);
    CHECK(std::abs(s.deflection[1]) <= c.autopilot.deflection_limit);
    CHECK(s.missile.mass > 0.0);
  }
  REQUIRE(r.source_switch_time.has_value());
  CHECK(*r.source_switch_time >= c.guidance.warmup);
  CHECK(*r.source_switch_time < c.guidance.warmup + c.dt);
}

TEST_CASE("mass never increases") {
  const EngagementRecord r = run_engagement(EngagementConfig{});
  for (std::size_t i = 1; i < r.samples.size(); ++i) {
    CHECK(r.samples[i].missile.mass <= r.samples[i - 1].missile.mass);
  }
}

TEST_CASE("with no lag the delayed source is the true source") {
  const EngagementRecord a = run_engagement(with_lag(0.0, LosSource::kTrue));
  const EngagementRecord b = run_engagement(with_lag(0.0, LosSource::kDelayed));
  CHECK(same(a, b));
}

TEST_CASE("with no lag and no horizon all three sources agree") {
  double miss[3];
  int i = 0;
  for (LosSource s : {LosSource::kTrue, LosSource::kDelayed, LosSource::kPredicted}) {
    EngagementConfig c = with_lag(0.0, s);
    c.guidance.warmup = 0.0;
    miss[i++] = run_engagement(c).miss_distance;
  }
  CHECK(std::abs(miss[0] - miss[1]) < 1e-6);
  // The predicted source still carries the observer's tracking error.
  CHECK(std::abs(miss[0] - miss[2]) < 5e-3);
}

TEST_CASE("prediction beats the lagged signal on the level target") {
  const EngagementConfig cd = with_lag(0.2, LosSource::kDelayed);
  const EngagementConfig cp = with_lag(0.2, LosSource::kPredicted);
  const EngagementRecord d = run_engagement(cd), p = run_engagement(cp);
  CHECK(p.miss_distance < d.miss_distance);
  const MetricsReport md = compute_metrics(d, cd), mp = compute_metrics(p, cp);
  REQUIRE(md.rmse_delayed.has_value());
  REQUIRE(mp.rmse_predicted.has_value());
  CHECK(*mp.rmse_predicted < *md.rmse_delayed);
}

TEST_CASE("miss distance, straight line past a point") {
  // Closest approach of the x axis to (0, 3, 4) is 5 m at x = 0.
  const EngagementRecord r = line_record({0.0, 3.0, 4.0}, 0.013, -51.7, 80);
  // Dense oracle on the analytic line at dt / 100.
  double best = INFINITY;
  for (int k = 0; k <= 80 * 100; ++k) {
    const double x = -51.7 + 100.0 * (k * 0.013 / 100);
    best = std::min(best, std::hypot(x, 5.0));
  }
  const ClosestApproach ca = miss_distance(r);
  CHECK(std::abs(ca.distance - best) < 1e-4);
  CHECK(ca.distance == doctest::Approx(5.0).epsilon(1e-9));
  CHECK(ca.time == doctest::Approx(0.517).epsilon(1e-7));
}

TEST_CASE("miss distance through a sample point is zero") {
  const EngagementRecord r = line_record({1.0, 0.0, 0.0}, 0.01, -9.0, 20);
  CHECK(miss_distance(r).distance < 1e-12);
}

TEST_CASE("opening geometry reports the first sample") {
  const EngagementRecord r = line_record({-10.0, 1.0, 0.0}, 0.01, 0.0, 20);
  const ClosestApproach ca = miss_distance(r);
  CHECK(ca.distance == doctest::Approx(r.samples[0].range).epsilon(1e-12));
  CHECK(ca.time == 0.0);
  CHECK_THROWS_AS(miss_distance(EngagementRecord{}), InvalidArgument);
}

TEST_CASE("miss refinement agrees with fine re-integration") {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> lag(0.0, 0.35);
  for (int i = 0; i < 5; ++i) {
    const double T = lag(rng);
    EngagementConfig c = with_lag(T, i % 2 ? LosSource::kPredicted : LosSource::kDelayed);
    c.target.kind = TargetKind::kWeaving;
    c.target.phase = sample_phase(derive_seed(99, i));
    const EngagementRecord r = run_engagement(c);
    REQUIRE(r.termination == Termination::kClosestApproach);
    std::size_t m = 0;
    for (std::size_t k = 1; k < r.samples.size(); ++k) {
      if (r.samples[k].range < r.samples[m].range) m = k;
    }
    const std::size_t first = m >= 2 ? m - 2 : 0;
    const std::size_t steps = std::min<std::size_t>(4, r.samples.size() - 1 - first);
    const ClosestApproach fine = restep_closest_approach(r, c, first, steps, 100);
    INFO("scenario " << i << " lag " << T);
    CHECK(std::abs(r.miss_distance - fine.distance) < 1e-4);
    CHECK(std::abs(r.miss_time - fine.time) < 1e-3);
  }
}

}  // TEST_SUITE

TEST_SUITE("engagement_fuzz") {

TEST_CASE("randomized configurations always terminate cleanly") {
  std::mt19937_64 rng(4242);
  auto u = [&](double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(rng);
  };
  int counts[4] = {0, 0, 0, 0};
  for (int i = 0; i < 1000; ++i) {
    EngagementConfig c;
    const double eps = u(0.02, 0.1);
    const double lag = u(0.0, 0.4);
    c.observer = ObserverConfig(ObserverGains{}, eps, u(0.0, 0.4));
    c.dt = std::min(eps / 4, u(5e-4, 2e-3));
    c.max_time = u(1.0, 40.0);
    c.seeker.lag_time_constant = lag;
    c.guidance.nav_ratio = u(2.0, 6.0);
    c.guidance.source = static_cast<LosSource>(i % 3);
    c.guidance.warmup = u(0.0, 3.0);
    c.autopilot.actuator_time_constant = u(0.005, 0.1);
    c.autopilot.deflection_limit = u(0.1, 0.6);
    c.launch.speed = u(5.0, 60.0);
    c.launch.elevation = u(0.05, 1.4);
    c.target.kind = i % 2 ? TargetKind::kWeaving : TargetKind::kLevel;
    c.target.initial_position = {u(3000, 15000), u(-4000, 4000), u(200, 8000)};
    c.target.speed = u(50, 400);
    c.target.weave_amplitude = u(0, 20);
    c.target.weave_frequency = u(0.5, 5);
    c.target.phase = u(0, 6.28);
    const EngagementRecord r = run_engagement(c);
    const int t = static_cast<int>(r.termination);
    REQUIRE(t >= 0);
    REQUIRE(t < 4);
    ++counts[t];
    CHECK(std::isfinite(r.miss_distance));
    CHECK(!r.samples.empty());
  }
  MESSAGE("closest " << counts[0] << " ground " << counts[1] << " timeout "
                     << counts[2] << " diverged " << counts[3]);
}

}  // TEST_SUITE
}  // namespace
}  // namespace pgs
