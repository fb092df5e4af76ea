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

#include "pgs/observer.hpp"

#include <cmath>
#include <string>

#include <Eigen/Core>

#include "pgs/error.hpp"
#include "pgs/rk4.hpp"

namespace pgs {
namespace {

using Vec8 = Eigen::Matrix<double, 8, 1>;

Vec8 pack(const ObserverState& s) {
  Vec8 x;
  for (int i = 0; i < 4; ++i) {
    x[i] = s.step1[i];
    x[4 + i] = s.step2[i];
  }
  return x;
}

Vec8 rhs(const Vec8& x, double v, const ObserverConfig& config) {
  const auto& g1 = config.step_one_gains();
  const auto& g2 = config.step_two_gains();
  const double e = v - x[0];
  Vec8 dx;
  dx[0] = x[1] + g1[0] * e;
  dx[1] = x[2] + g1[1] * e;
  dx[2] = x[3] + g1[2] * e;
  dx[3] = g1[3] * e;
  if (config.paper_literal_step1()) dx[3] += x[2];
  dx[4] = x[5] + g2[0] * e;
  dx[5] = x[6] + g2[1] * e;
  dx[6] = x[7] + g2[2] * e;
  dx[7] = g2[3] * e;
  return dx;
}

}  // namespace

bool validate_gains(const ObserverGains& g) {
  if (!(g.k1 > 0.0 && g.k2 > 0.0 && g.k3 > 0.0 && g.k4 > 0.0)) return false;
  // Routh array first column for a monic quartic.
  const double b1 = g.k1 * g.k2 - g.k3;
  if (!(b1 > 0.0)) return false;
  const double c1 = b1 * g.k3 - g.k1 * g.k1 * g.k4;
  return c1 > 0.0;
}

ObserverConfig::ObserverConfig(const ObserverGains& gains, double epsilon,
                               double delta, bool paper_literal_step1)
    : gains_(gains),
      epsilon_(epsilon),
      delta_(delta),
      paper_literal_step1_(paper_literal_step1) {
  if (!validate_gains(gains)) {
    throw InvalidArgument(
        "observer gains fail the Hurwitz stability test (need k_i > 0, "
        "k1*k2 - k3 > 0, (k1*k2 - k3)*k3 - k1^2*k4 > 0)");
  }
  if (!(std::isfinite(epsilon) && epsilon > 0.0)) {
    throw InvalidArgument("observer epsilon must be finite and > 0");
  }
  if (!(std::isfinite(delta) && delta >= 0.0)) {
    throw InvalidArgument("observer delta must be finite and >= 0");
  }
  const double e1 = epsilon;
  const double e2 = e1 * epsilon;
  const double e3 = e2 * epsilon;
  const double e4 = e3 * epsilon;
  step_one_ = {gains.k1 / e1, gains.k2 / e2, gains.k3 / e3, gains.k4 / e4};
  step_two_ = second_step_injection_gains(*this);
}

std::array<double, 4> second_step_injection_gains(const ObserverGains& k,
                                                  double epsilon,
                                                  double delta) {
  const double e1 = epsilon;
  const double e2 = e1 * epsilon;
  const double e3 = e2 * epsilon;
  const double e4 = e3 * epsilon;
  const std::array<double, 4> a{k.k1 / e1, k.k2 / e2, k.k3 / e3, k.k4 / e4};
  const double d = delta;
  const double d2 = d * d;
  const double d3 = d2 * d;
  return {
      a[3] * d3 / 6.0 + a[2] * d2 / 2.0 + a[1] * d + a[0],
      a[3] * d2 / 2.0 + a[2] * d + a[1],
      a[3] * d + a[2],
      a[3],
  };
}

std::array<double, 4> second_step_injection_gains(
    const ObserverConfig& config) {
  return second_step_injection_gains(config.gains(), config.epsilon(),
                                     config.delta());
}

std::array<double, 8> observer_rhs(const ObserverState& state, double v,
                                   const ObserverConfig& config) {
  if (!std::isfinite(v)) {
    throw InvalidArgument("observer input is not finite");
  }
  const Vec8 dx = rhs(pack(state), v, config);
  std::array<double, 8> out{};
  for (int i = 0; i < 8; ++i) out[i] = dx[i];
  return out;
}

namespace {

void check_step(double dt, const ObserverConfig& config) {
  if (!(dt > 0.0)) {
    throw InvalidArgument("observer step dt must be > 0");
  }
  if (dt > config.max_step()) {
    throw InvalidArgument("observer step dt = " + std::to_string(dt) +
                          " exceeds epsilon/4 = " +
                          std::to_string(config.max_step()));
  }
}

// `input(t)` supplies v at each RK4 stage time.
template <typename Input>
ObserverState advance(const ObserverState& state, Input&& input, double dt,
                      const ObserverConfig& config) {
  const Vec8 x = rk4_step(
      [&](double t, const Vec8& y) -> Vec8 {
        const double v = input(t);
        if (!std::isfinite(v)) {
          throw InvalidArgument("observer input is not finite at t = " +
                                std::to_string(t));
        }
        return rhs(y, v, config);
      },
      state.t, pack(state), dt);

  for (int i = 0; i < 8; ++i) {
    if (!std::isfinite(x[i])) {
      throw DivergenceError("observer diverged: step" +
                            std::to_string(i / 4 + 1) + "[" +
                            std::to_string(i % 4) + "] is not finite at t = " +
                            std::to_string(state.t + dt));
    }
  }
  ObserverState next;
  for (int i = 0; i < 4; ++i) {
    next.step1[i] = x[i];
    next.step2[i] = x[4 + i];
  }
  next.t = state.t + dt;
  return next;
}

}  // namespace

ObserverState observer_step(const ObserverState& state, double v, double dt,
                            const ObserverConfig& config) {
  check_step(dt, config);
  if (!std::isfinite(v)) {
    throw InvalidArgument("observer input is not finite");
  }
  return advance(state, [v](double) { return v; }, dt, config);
}

ObserverState observer_step(const ObserverState& state,
                            const std::function<double(double)>& v, double dt,
                            const ObserverConfig& config) {
  check_step(dt, config);
  return advance(state, v, dt, config);
}

Prediction prediction(const ObserverState& state) {
  return {state.step2[0], state.step2[1], state.step2[2], state.step2[3]};
}

ObserverState reset(const ObserverConfig&, double v0) {
  if (!std::isfinite(v0)) {
    throw InvalidArgument("observer reset value is not finite");
  }
  ObserverState s;
  s.step1[0] = v0;
  s.step2[0] = v0;
  return s;
}

}  // namespace pgs
