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
#include <limits>
#include <random>

#include "doctest.h"
#include "pgs/error.hpp"
#include "pgs/guidance.hpp"

namespace pgs {
namespace {

TEST_SUITE("guidance") {

TEST_CASE("closing velocity") {
  CHECK(closing_velocity({1000, 0, 0}, {-500, 0, 0}) == doctest::Approx(500.0));
  CHECK(closing_velocity({1000, 0, 0}, {0, 300, 0}) == 0.0);
  CHECK(closing_velocity({1000, 0, 0}, {50, 0, 0}) < 0.0);
  CHECK_THROWS_AS(closing_velocity({0, 0, 0}, {1, 0, 0}), InvalidArgument);
}

TEST_CASE("proportional navigation") {
  GuidanceConfig g;
  g.nav_ratio = 4.0;
  CHECK(pn_command(Vec2::Zero(), 500.0, g) == Vec2::Zero());
  const Vec2 a = pn_command(Vec2(0.01, 0.0), 500.0, g);
  CHECK(a[0] == doctest::Approx(20.0).epsilon(1e-14));
  CHECK(a[1] == 0.0);
  CHECK(pn_command(Vec2(0.01, 0.0), -500.0, g)[0] == doctest::Approx(-20.0));
}

TEST_CASE("proportional navigation is linear") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  GuidanceConfig g;
  g.nav_ratio = 3.5;
  for (int i = 0; i < 100; ++i) {
    const Vec2 l1(u(rng), u(rng)), l2(u(rng), u(rng));
    const double vc = 1000 * u(rng), a = 3 * u(rng);
    const Vec2 sum = pn_command(l1 + l2, vc, g);
    CHECK((sum - pn_command(l1, vc, g) - pn_command(l2, vc, g)).norm() <= 1e-11);
    CHECK((pn_command(a * l1, vc, g) - a * pn_command(l1, vc, g)).norm() <= 1e-11);
    CHECK((pn_command(l1, a * vc, g) - a * pn_command(l1, vc, g)).norm() <= 1e-11);
  }
}

TEST_CASE("source selection and warm-up gating") {
  const Vec2 tr(1, 1), de(2, 2), pr(3, 3);
  GuidanceConfig g;
  g.warmup = 2.0;
  g.source = LosSource::kTrue;
  CHECK(select_source(0.0, g, tr, de, pr) == tr);
  CHECK(select_source(10.0, g, tr, de, pr) == tr);
  g.source = LosSource::kDelayed;
  CHECK(select_source(10.0, g, tr, de, pr) == de);
  g.source = LosSource::kPredicted;
  CHECK(select_source(1.0, g, tr, de, pr) == de);
  CHECK(select_source(2.5, g, tr, de, pr) == pr);
  CHECK(select_source(2.0, g, tr, de, pr) == pr);
}

TEST_CASE("source names round-trip") {
  for (LosSource s : {LosSource::kTrue, LosSource::kDelayed, LosSource::kPredicted}) {
    CHECK(parse_los_source(to_string(s)) == s);
  }
  CHECK_FALSE(parse_los_source("corrected").has_value());
}

TEST_CASE("autopilot decays toward zero with no command") {
  AutopilotConfig ap;
  ap.actuator_time_constant = 0.02;
  Vec2 d(0.1, -0.2);
  for (int k = 0; k < 20; ++k) d = autopilot_step(Vec2::Zero(), d, 1e-3, ap, 0.01);
  const double f = std::exp(-0.02 / 0.02);
  CHECK(d[0] == doctest::Approx(0.1 * f).epsilon(1e-12));
  CHECK(d[1] == doctest::Approx(-0.2 * f).epsilon(1e-12));
}

TEST_CASE("autopilot saturates") {
  AutopilotConfig ap;
  Vec2 d = Vec2::Zero();
  for (int k = 0; k < 1000; ++k) d = autopilot_step(Vec2(1e9, -1e9), d, 1e-3, ap, 0.01);
  CHECK(d[0] == doctest::Approx(ap.deflection_limit));
  CHECK(d[1] == doctest::Approx(-ap.deflection_limit));
  CHECK(std::abs(d[0]) <= ap.deflection_limit);
}

TEST_CASE("autopilot settles on gain times command") {
  AutopilotConfig ap;
  Vec2 d = Vec2::Zero();
  for (int k = 0; k < 2000; ++k) d = autopilot_step(Vec2(30.0, -12.0), d, 1e-3, ap, 0.005);
  CHECK(d[0] == doctest::Approx(0.15).epsilon(1e-12));
  CHECK(d[1] == doctest::Approx(-0.06).epsilon(1e-12));
}

TEST_CASE("autopilot ignores a NaN demand") {
  AutopilotConfig ap;
  const Vec2 d = autopilot_step(Vec2(1.0, 1.0), Vec2(0.1, 0.1), 1e-3, ap,
                                std::numeric_limits<double>::quiet_NaN());
  CHECK(d[0] < 0.1);
  CHECK(std::isfinite(d[1]));
  CHECK_THROWS_AS(autopilot_step(Vec2::Zero(), Vec2::Zero(), 0.0, ap, 1.0),
                  InvalidArgument);
}

}  // TEST_SUITE
}  // namespace
}  // namespace pgs
