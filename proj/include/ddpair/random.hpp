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

#ifndef DDPAIR_RANDOM_HPP
#define DDPAIR_RANDOM_HPP

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "ddpair/basis.hpp"
#include "ddpair/geometry.hpp"

namespace ddpair {

inline constexpr std::uint64_t kDefaultSeed = 42;

// Seeded generator for the verification experiments and property tests.
// All mappings from raw engine output to doubles are written out here so
// the streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  // Uniform in [0, 1).
  double canonical() { return (engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * canonical(); }

  double normal();

  // Uniform on the unit sphere.
  Eigen::Vector3d unit_vector();

  // Separation uniform in [r_min, r_max], orientation uniform on the sphere.
  Geometry geometry(double r_min = 0.05, double r_max = 5.0);

  // Random density matrix M M^dagger / Tr, full rank almost surely.
  Matrix16c hermitian_state();

 private:
  std::mt19937_64 engine_;
};

}  // namespace ddpair

#endif  // DDPAIR_RANDOM_HPP
