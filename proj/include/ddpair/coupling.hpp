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

#ifndef DDPAIR_COUPLING_HPP
#define DDPAIR_COUPLING_HPP

#include <Eigen/Dense>

#include "ddpair/geometry.hpp"

namespace ddpair {

// Transition dipole moments of the S0 <-> P1 multiplet in units of the
// reduced matrix element: d1 = (ex + i ey)/sqrt(2) for the m = -1 sublevel,
// d2 = ez for m = 0, and d3 = -(ex - i ey)/sqrt(2) for m = +1. Pairwise
// orthogonal as complex vectors, each of unit norm.
struct DipoleSet {
  Eigen::Vector3cd d1;
  Eigen::Vector3cd d2;
  Eigen::Vector3cd d3;

  static const DipoleSet& standard();

  // Dipole of the |i> <-> ground transition, i in 1..3.
  const Eigen::Vector3cd& d(int i) const;
};

// Vacuum coupling tensor between the two atoms. Symmetric in its Cartesian
// indices; the real part feeds the coherent couplings Omega_ij and the
// imaginary part the collective decay rates Gamma_ij. Normalized so that
// Gamma_ii -> gamma = 1 as the separation goes to zero.
struct ChiTensor {
  Eigen::Matrix3cd entries;

  Eigen::Matrix3d real_part() const { return entries.real(); }
  Eigen::Matrix3d imag_part() const { return entries.imag(); }
};

// Coherent couplings Omega_ij and collective decay rates Gamma_ij between
// transition i of one atom and transition j of the other, in units of
// gamma. Both matrices are Hermitian: the lower triangle (i >= j) carries
// the closed-form entries, the upper triangle their conjugates.
struct CouplingSet {
  Eigen::Matrix3cd omega;
  Eigen::Matrix3cd gamma;

  // Largest |Omega_ij| or |Gamma_ij| with i != j.
  double max_cross_coupling() const;

  // Copy with all cross terms (i != j) removed.
  CouplingSet diagonal_only() const;
};

// Vacuum coupling tensor at the given separation,
//   chi_kl = (3/2) * [g1(eta) delta_kl - g2(eta) Rk Rl / R^2] * exp(i eta),
// with g1 = 1/eta + i/eta^2 - 1/eta^3 and g2 = 1/eta + 3i/eta^2 - 3/eta^3.
ChiTensor chi_tensor(const Geometry& geom);

// Couplings by contraction of the dipoles with the tensor,
//   Omega_ij = d_i^T Re(chi) conj(d_j),  Gamma_ij = d_i^T Im(chi) conj(d_j).
// This is the canonical evaluation path; it is free of the removable
// cot(theta) singularities of the trigonometric closed forms.
CouplingSet coupling_from_tensor(const Geometry& geom);

// Couplings from the explicit trigonometric closed forms. The cot(theta)
// products are evaluated through their analytic limits (sin^2 * cot ->
// sin*cos), so theta = 0 and theta = pi are regular. Intended as an
// independent cross-check of coupling_from_tensor.
CouplingSet coupling_closed_form(const Geometry& geom);

}  // namespace ddpair

#endif  // DDPAIR_COUPLING_HPP
