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

#ifndef DDPAIR_BASIS_HPP
#define DDPAIR_BASIS_HPP

#include <complex>

#include <Eigen/Dense>

namespace ddpair {

// Single-atom level numbering. Levels 1, 2, 3 are the P1 Zeeman sublevels
// with magnetic quantum numbers m = -1, 0, +1; level 4 is the S0 ground
// state. All couplings and rates are in units of the single-atom decay
// rate gamma (excited-state populations decay as exp(-2*gamma*t)), lengths
// are in units of the transition wavelength lambda0, and hbar = 1.
inline constexpr int kNumLevels = 4;
inline constexpr int kGroundLevel = 4;

// Dimension of the two-atom product space.
inline constexpr int kDim = 16;

using Complex = std::complex<double>;
using Matrix4c = Eigen::Matrix<Complex, 4, 4>;
using Matrix16c = Eigen::Matrix<Complex, 16, 16>;
using Vector16c = Eigen::Matrix<Complex, 16, 1>;

// Two-atom product basis |i,j> = |i>_1 (x) |j>_2, flattened as
// 4*(i-1) + (j-1) with i the level of atom 1 and j the level of atom 2.
// This ordering is the single source of truth; every module indexes
// through it.
constexpr int product_index(int level_atom1, int level_atom2) {
  return kNumLevels * (level_atom1 - 1) + (level_atom2 - 1);
}

// Unit vector for the product state |i,j>.
Vector16c product_ket(int level_atom1, int level_atom2);

// True if `level` is a valid single-atom level (1..4).
constexpr bool is_valid_level(int level) {
  return level >= 1 && level <= kNumLevels;
}

}  // namespace ddpair

#endif  // DDPAIR_BASIS_HPP
