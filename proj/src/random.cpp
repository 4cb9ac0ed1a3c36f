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

#include "ddpair/random.hpp"

#include <cmath>
#include <numbers>

namespace ddpair {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double Rng::normal() {
  // Box-Muller; written out so the stream does not depend on the standard
  // library's distribution internals.
  double u1 = canonical();
  while (u1 <= 0.0) u1 = canonical();
  const double u2 = canonical();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

Eigen::Vector3d Rng::unit_vector() {
  const double z = uniform(-1.0, 1.0);
  const double phi = uniform(0.0, kTwoPi);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return Eigen::Vector3d(s * std::cos(phi), s * std::sin(phi), z);
}

Geometry Rng::geometry(double r_min, double r_max) {
  const double r = uniform(r_min, r_max);
  const double theta = std::acos(uniform(-1.0, 1.0));
  const double phi = uniform(0.0, kTwoPi);
  return Geometry(r, theta, phi);
}

Matrix16c Rng::hermitian_state() {
  Matrix16c m;
  for (int r = 0; r < kDim; ++r) {
    for (int c = 0; c < kDim; ++c) {
      m(r, c) = Complex(normal(), normal());
    }
  }
  Matrix16c rho = m * m.adjoint();
  rho /= rho.trace();
  return rho;
}

}  // namespace ddpair
