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

#include "ddpair/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ddpair {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_phi(double phi) {
  double p = std::fmod(phi, 2.0 * kPi);
  if (p < 0.0) p += 2.0 * kPi;
  if (p >= 2.0 * kPi) p = 0.0;  // fmod can land exactly on the period
  return p + 0.0;               // normalize -0.0
}

}  // namespace

Geometry::Geometry(double separation, double theta, double phi)
    : separation_(separation), theta_(theta), phi_(wrap_phi(phi)) {
  if (!std::isfinite(separation) || separation <= 0.0) {
    throw std::invalid_argument(
        "Geometry: separation must be finite and > 0, got " +
        std::to_string(separation));
  }
  if (!std::isfinite(theta) || theta < 0.0 || theta > kPi) {
    throw std::invalid_argument("Geometry: theta must lie in [0, pi], got " +
                                std::to_string(theta));
  }
  if (!std::isfinite(phi)) {
    throw std::invalid_argument("Geometry: phi must be finite");
  }
}

double Geometry::eta() const { return 2.0 * kPi * separation_; }

Eigen::Vector3d Geometry::cartesian() const {
  const double st = std::sin(theta_);
  return separation_ * Eigen::Vector3d(st * std::cos(phi_),
                                       st * std::sin(phi_),
                                       std::cos(theta_));
}

Geometry Geometry::from_cartesian(const Eigen::Vector3d& r) {
  const double norm = r.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument(
        "Geometry::from_cartesian: vector must be nonzero and finite");
  }
  const double theta = std::acos(std::clamp(r.z() / norm, -1.0, 1.0));
  const double phi = std::atan2(r.y(), r.x());
  return Geometry(norm, theta, phi);
}

}  // namespace ddpair
