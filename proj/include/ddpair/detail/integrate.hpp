// Copyright 2026 The ddpair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DDPAIR_DETAIL_INTEGRATE_HPP
#define DDPAIR_DETAIL_INTEGRATE_HPP

#include <cmath>

namespace ddpair::detail {

// Classical fourth-order step y(t) -> y(t + dt).
template <class State, class Rhs>
State rk4_step(const State& y, double dt, Rhs&& rhs) {
  const State k1 = rhs(y);
  const State k2 = rhs(y + (0.5 * dt) * k1);
  const State k3 = rhs(y + (0.5 * dt) * k2);
  const State k4 = rhs(y + dt * k3);
  return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Advance one output interval with the largest uniform substep <= dt that
// lands exactly on the interval end.
template <class State, class Rhs>
State advance_interval(State y, double interval, double dt, Rhs&& rhs) {
  const int steps = std::max(1, static_cast<int>(std::ceil(interval / dt - 1e-12)));
  const double h = interval / steps;
  for (int s = 0; s < steps; ++s) {
    y = rk4_step(y, h, rhs);
  }
  return y;
}

}  // namespace ddpair::detail

#endif  // DDPAIR_DETAIL_INTEGRATE_HPP
