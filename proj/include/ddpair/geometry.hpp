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

#ifndef DDPAIR_GEOMETRY_HPP
#define DDPAIR_GEOMETRY_HPP

#include <Eigen/Dense>

namespace ddpair {

// Relative position of atom 2 with respect to atom 1, in spherical
// coordinates. R is the separation in units of lambda0, theta the polar
// angle measured from the quantization (z) axis, phi the azimuth.
//
// The constructor rejects R <= 0 and theta outside [0, pi]; phi is wrapped
// into [0, 2*pi).
class Geometry {
 public:
  Geometry(double separation, double theta, double phi);

  double separation() const { return separation_; }
  double theta() const { return theta_; }
  double phi() const { return phi_; }

  // Dimensionless separation eta = k0 * R = 2*pi*R.
  double eta() const;

  // Cartesian separation vector R * (sin t cos p, sin t sin p, cos t).
  Eigen::Vector3d cartesian() const;

  // Spherical parameterization of an arbitrary nonzero vector.
  static Geometry from_cartesian(const Eigen::Vector3d& r);

 private:
  double separation_;
  double theta_;
  double phi_;
};

}  // namespace ddpair

#endif  // DDPAIR_GEOMETRY_HPP
