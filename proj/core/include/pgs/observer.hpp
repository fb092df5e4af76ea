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

// Two-step predictor observer for a scalar signal v(t).
//
// The first step is a fourth-order high-gain differentiator: its states
// converge to v and its first three time derivatives. The second step is
// driven by the same innovation v - x1[0], with injection gains that are the
// first-step gains pushed through a Taylor shift of length `delta`, so its
// states converge to v(t + delta) and the derivatives at t + delta.
//
// Gains scale as k_i / epsilon^i; small epsilon means fast convergence and a
// larger initial peaking transient.

#ifndef PGS_OBSERVER_HPP_
#define PGS_OBSERVER_HPP_

#include <array>
#include <cstddef>
#include <functional>

namespace pgs {

struct ObserverGains {
  double k1 = 4.0;
  double k2 = 6.0;
  double k3 = 4.0;
  double k4 = 1.0;
};

// True iff s^4 + k1 s^3 + k2 s^2 + k3 s + k4 is Hurwitz (Routh-Hurwitz).
bool validate_gains(const ObserverGains& gains);

// Validated, immutable observer parameters. Construction throws
// InvalidArgument for non-Hurwitz gains, epsilon <= 0 or delta < 0.
class ObserverConfig {
 public:
  ObserverConfig() : ObserverConfig(ObserverGains{}, 0.05, 0.0) {}
  ObserverConfig(const ObserverGains& gains, double epsilon, double delta,
                 bool paper_literal_step1 = false);

  const ObserverGains& gains() const { return gains_; }
  double epsilon() const { return epsilon_; }
  double delta() const { return delta_; }

  // When set, the last first-step row keeps the extra x1[2] feed-through
  // term of the originally published equations. Off by default.
  bool paper_literal_step1() const { return paper_literal_step1_; }

  // k_i / epsilon^i.
  const std::array<double, 4>& step_one_gains() const { return step_one_; }
  // Taylor-shifted injection gains of the second step.
  const std::array<double, 4>& step_two_gains() const { return step_two_; }

  // Largest step accepted by observer_step.
  double max_step() const { return epsilon_ / 4.0; }

 private:
  ObserverGains gains_;
  double epsilon_;
  double delta_;
  bool paper_literal_step1_;
  std::array<double, 4> step_one_{};
  std::array<double, 4> step_two_{};
};

// step1[i] estimates v^(i)(t); step2[i] estimates v^(i)(t + delta).
struct ObserverState {
  std::array<double, 4> step1{};
  std::array<double, 4> step2{};
  double t = 0.0;

  bool operator==(const ObserverState&) const = default;
};

struct Prediction {
  double value = 0.0;  // v(t + delta)
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
};

// g1 = (1/6)(k4/e^4)D^3 + (1/2)(k3/e^3)D^2 + (k2/e^2)D + k1/e
// g2 = (1/2)(k4/e^4)D^2 + (k3/e^3)D + k2/e^2
// g3 = (k4/e^4)D + k3/e^3
// g4 = k4/e^4
std::array<double, 4> second_step_injection_gains(const ObserverConfig& config);

// Same formulas on raw parameters, without the stability gate.
std::array<double, 4> second_step_injection_gains(const ObserverGains& gains,
                                                  double epsilon, double delta);

// Time derivatives of both steps, ordered (step1[0..3], step2[0..3]).
// Throws InvalidArgument if v is not finite.
std::array<double, 8> observer_rhs(const ObserverState& state, double v,
                                   const ObserverConfig& config);

// Advances the state by one RK4 step with v held over the step.
// Requires 0 < dt <= epsilon / 4. Throws DivergenceError naming the first
// non-finite entry of the result.
ObserverState observer_step(const ObserverState& state, double v, double dt,
                            const ObserverConfig& config);

// Same, for a signal known in closed form: v(t) is evaluated at each RK4
// stage time instead of being held, so the only error left is the
// integrator's.
ObserverState observer_step(const ObserverState& state,
                            const std::function<double(double)>& v, double dt,
                            const ObserverConfig& config);

Prediction prediction(const ObserverState& state);

// Starts both steps at v0 with zero derivative estimates, t = 0.
ObserverState reset(const ObserverConfig& config, double v0);

}  // namespace pgs

#endif  // PGS_OBSERVER_HPP_
