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
#include <random>

#include <Eigen/Geometry>

#include "doctest.h"
#include "pgs/error.hpp"
#include "pgs/seeker.hpp"

namespace pgs {
namespace {

TEST_SUITE("seeker") {

TEST_CASE("pure closing gives zero LOS rate") {
  const Vec2 w = true_los_rate({1000, 200, -50}, {-100, -20, 5});
  CHECK(w.norm() < 1e-15);
}

TEST_CASE("vertical crossing rate appears on the elevation channel") {
  const Vec2 w = true_los_rate({1000, 0, 0}, {0, 0, 10});
  CHECK(w[0] == doctest::Approx(0.01).epsilon(1e-14));
  CHECK(w[1] == doctest::Approx(0.0));
}

TEST_CASE("horizontal crossing rate appears on the azimuth channel") {
  // Target moving to the left (+y seen from +x) rotates the LOS left.
  const Vec2 w = true_los_rate({1000, 0, 0}, {0, 10, 0});
  CHECK(w[0] == doctest::Approx(0.0));
  CHECK(w[1] == doctest::Approx(0.01).epsilon(1e-14));
}

TEST_CASE("LOS rate magnitude is |R x Rdot| / |R|^2 and scales as 1/c") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1000, 1000);
  for (int i = 0; i < 100; ++i) {
    const Eigen::Vector3d r(u(rng), u(rng), u(rng) / 5), v(u(rng), u(rng), u(rng));
    const Vec2 w = true_los_rate(r, v);
    CHECK(w.norm() == doctest::Approx(r.cross(v).norm() / r.squaredNorm()).epsilon(1e-10));
    const Vec2 w3 = true_los_rate(3.0 * r, v);
    CHECK((w3 - w / 3.0).norm() <= 1e-12 * (1 + w.norm()));
  }
  CHECK_THROWS_AS(true_los_rate(Eigen::Vector3d::Zero(), {1, 0, 0}), InvalidArgument);
}

TEST_CASE("LOS frame is orthonormal with a horizontal left axis") {
  const LosFrame f = los_frame({300, -400, 120});
  CHECK(f.los.norm() == doctest::Approx(1.0));
  CHECK(f.left.norm() == doctest::Approx(1.0));
  CHECK(f.up.norm() == doctest::Approx(1.0));
  CHECK(f.left.z() == 0.0);
  CHECK(f.los.dot(f.left) == doctest::Approx(0.0));
  CHECK(f.up.z() > 0.0);
}

TEST_CASE("zero lag passes the input through") {
  const SeekerConfig c{0.0};
  const SeekerState s = delay_step(SeekerState{}, Vec2(0.3, -0.7), 1e-3, c);
  CHECK(s.delayed_rate == Vec2(0.3, -0.7));
}

TEST_CASE("step response is exact at any step size") {
  const SeekerConfig c{0.2};
  const Vec2 in(0.05, -0.02);
  for (double dt : {1e-3, 0.01, 0.1}) {
    SeekerState s;
    const int n = static_cast<int>(std::lround(0.5 / dt));
    for (int k = 0; k < n; ++k) s = delay_step(s, in, dt, c);
    const double f = 1 - std::exp(-0.5 / 0.2);
    CHECK(s.delayed_rate[0] == doctest::Approx(0.05 * f).epsilon(1e-12));
    CHECK(s.delayed_rate[1] == doctest::Approx(-0.02 * f).epsilon(1e-12));
  }
}

TEST_CASE("fixed point") {
  SeekerState s;
  s.delayed_rate = Vec2(0.4, 0.4);
  CHECK(delay_step(s, Vec2(0.4, 0.4), 0.01, SeekerConfig{0.2}).delayed_rate ==
        Vec2(0.4, 0.4));
}

TEST_CASE("n small steps compose to one large step") {
  const SeekerConfig c{0.15};
  SeekerState a, b;
  a.delayed_rate = b.delayed_rate = Vec2(1.0, -2.0);
  for (int k = 0; k < 50; ++k) a = delay_step(a, Vec2(0.2, 0.3), 0.002, c);
  b = delay_step(b, Vec2(0.2, 0.3), 0.1, c);
  CHECK((a.delayed_rate - b.delayed_rate).norm() < 1e-13);
}

TEST_CASE("output stays between previous output and input") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1, 1);
  SeekerState s;
  const SeekerConfig c{0.2};
  for (int k = 0; k < 1000; ++k) {
    const Vec2 in(u(rng), u(rng));
    const SeekerState n = delay_step(s, in, 1e-3 + 0.01 * std::abs(u(rng)), c);
    for (int i = 0; i < 2; ++i) {
      CHECK(n.delayed_rate[i] >= std::min(s.delayed_rate[i], in[i]));
      CHECK(n.delayed_rate[i] <= std::max(s.delayed_rate[i], in[i]));
    }
    s = n;
  }
}

TEST_CASE("error decays by e every time constant") {
  const SeekerConfig c{0.25};
  SeekerState s;
  const Vec2 in(1.0, 1.0);
  for (int k = 0; k < 250; ++k) s = delay_step(s, in, 1e-3, c);
  CHECK(1.0 - s.delayed_rate[0] == doctest::Approx(std::exp(-1.0)).epsilon(1e-10));
  for (int k = 0; k < 250; ++k) s = delay_step(s, in, 1e-3, c);
  CHECK(1.0 - s.delayed_rate[0] == doctest::Approx(std::exp(-2.0)).epsilon(1e-10));
}

TEST_CASE("bad step") {
  CHECK_THROWS_AS(delay_step(SeekerState{}, Vec2::Zero(), 0.0, SeekerConfig{}),
                  InvalidArgument);
}

}  // TEST_SUITE
}  // namespace
}  // namespace pgs
