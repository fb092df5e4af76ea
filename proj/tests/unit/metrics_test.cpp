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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "pgs/error.hpp"
#include "pgs/metrics.hpp"

namespace pgs {
namespace {

TEST_SUITE("metrics") {

TEST_CASE("rmse by hand") {
  const std::vector<double> p{0, 1, 2}, r{0, 0, 0};
  CHECK(std::abs(los_rmse(p, r, 0.0, 0.1) - std::sqrt(5.0 / 3.0)) < 1e-12);
}

TEST_CASE("rmse of a perfect shifted prediction is zero") {
  std::vector<double> truth, pred;
  const double dt = 0.01;
  for (int i = 0; i < 200; ++i) truth.push_back(std::sin(i * dt));
  // pred[i] estimates truth at i + 3 steps.
  for (int i = 0; i < 200; ++i) pred.push_back(std::sin((i + 3) * dt));
  CHECK(los_rmse(pred, truth, 3 * dt, dt) == 0.0);
}

TEST_CASE("rmse of a constant offset") {
  std::vector<double> p(50, 2.25), r(50, 0.0);
  CHECK(los_rmse(p, r, 0.0, 1e-3) == doctest::Approx(2.25).epsilon(1e-14));
  for (auto& x : p) x = -0.5;
  CHECK(los_rmse(p, r, 0.0, 1e-3) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("two-channel rmse") {
  const std::vector<Vec2> p{Vec2(1, 0), Vec2(1, 0)}, r{Vec2(0, 0), Vec2(0, 0)};
  // Channel MSEs 1 and 0.
  CHECK(los_rmse(p, r, 0.0, 0.1) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
}

TEST_CASE("rmse argument checks") {
  const std::vector<double> p{1, 2, 3}, r{1, 2, 3};
  CHECK_THROWS_AS(los_rmse(p, r, 0.015, 0.01), InvalidArgument);
  CHECK_THROWS_AS(los_rmse(p, r, -0.01, 0.01), InvalidArgument);
  CHECK_THROWS_AS(los_rmse(p, r, 0.03, 0.01), InvalidArgument);
  CHECK_THROWS_AS(los_rmse(p, r, 0.0, 0.01, 4), InvalidArgument);
  CHECK_THROWS_AS(los_rmse(p, r, 0.0, 0.0), InvalidArgument);
}

EngagementRecord flat_record(int n, double dt) {
  EngagementRecord r;
  r.dt = dt;
  for (int i = 0; i < n; ++i) {
    Sample s;
    s.t = i * dt;
    r.samples.push_back(s);
  }
  return r;
}

TEST_CASE("command statistics") {
  EngagementRecord r = flat_record(11, 0.1);
  AccelStats a = commanded_accel_stats(r);
  CHECK(a.peak == 0.0);
  CHECK(a.integral_abs_deflection == 0.0);

  r.samples[4].accel_cmd = Vec2(3.0, -4.0);
  CHECK(commanded_accel_stats(r).peak == doctest::Approx(5.0));

  // Constant deflection d on both channels over T = 1 s.
  for (auto& s : r.samples) s.deflection = Vec2(0.05, -0.05);
  CHECK(commanded_accel_stats(r).integral_abs_deflection ==
        doctest::Approx(2 * 0.05 * 1.0).epsilon(1e-12));
  CHECK_THROWS_AS(commanded_accel_stats(EngagementRecord{}), InvalidArgument);
}

TEST_CASE("report windows and short records") {
  EngagementConfig c;
  c.guidance.warmup = 0.5;
  EngagementRecord r = flat_record(400, 1e-3);
  for (auto& s : r.samples) {
    s.los_true = Vec2(1.0, 1.0);
    s.los_delayed = Vec2(0.0, 1.0);
    s.los_predicted = Vec2(s.t < 0.2 ? 9.0 : 1.0, 1.0);
  }
  const MetricsReport m = compute_metrics(r, c);
  // The record ends before the 0.5 s warm-up does: no windowed values.
  CHECK_FALSE(m.rmse_delayed.has_value());
  REQUIRE(m.rmse_delayed_full.has_value());
  CHECK(*m.rmse_delayed_full == doctest::Approx(std::sqrt(0.5)));
  // The miss is recomputed from the samples, not copied from the record.
  CHECK(m.miss_distance == miss_distance(r).distance);

  c.guidance.warmup = 0.2;
  const MetricsReport w = compute_metrics(r, c);
  REQUIRE(w.rmse_predicted.has_value());
  CHECK(*w.rmse_predicted == 0.0);
  CHECK(*w.rmse_predicted_full > 0.0);
}

}  // TEST_SUITE
}  // namespace
}  // namespace pgs
