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

#ifndef DDPAIR_OPERATORS_HPP
#define DDPAIR_OPERATORS_HPP

#include <array>

#include <Eigen/Dense>

#include "ddpair/basis.hpp"
#include "ddpair/coupling.hpp"

namespace ddpair {

// Physical parameters of the driven pair, all in units of gamma. The
// dynamics are expressed in the frame rotating at the laser frequency
// (or at the bare transition frequency when no laser is present), so
// every Hamiltonian here is time independent.
struct SystemParams {
  double delta = 0.0;     // Zeeman splitting of the excited sublevels
  double omega_L = 0.0;   // Rabi frequency of the sigma+ drive
  double detuning = 0.0;  // laser detuning from the bare transition
  bool laser_on = false;

  // Throws std::invalid_argument on non-finite fields or omega_L < 0.
  void validate() const;
};

enum class Direction { kRaise, kLower };

// |i><4| (or its adjoint) on the given atom, tensored with the identity
// on the other atom. atom in {1, 2}, level in {1, 2, 3}.
Matrix16c transition_operator(int atom, int level, Direction dir);

// Free atomic Hamiltonian in the rotating frame: level i carries energy
// -Delta + m_i * delta with m = (-1, 0, +1). When laser_on is false the
// detuning is identically zero.
Matrix16c hamiltonian_atomic(const SystemParams& params);

// Coherent part of the dipole-dipole interaction,
//   H = -sum_ij { Omega_ij Sp_i(2) Sm_j(1) + h.c. }.
// Acts only within the single-excitation manifold.
Matrix16c hamiltonian_dipole(const CouplingSet& couplings);

// Atom-laser coupling in the rotating frame,
//   H = omega_L * sum_mu (Sp_3(mu) + Sm_3(mu));
// the sigma+ drive touches only the |3> <-> |4> transition.
Matrix16c hamiltonian_laser(const SystemParams& params);

// Spontaneous-emission superoperator with precomputed jump structure, for
// repeated application at fixed couplings. The superoperator itself is
// never materialized; apply() evaluates
//   L(rho) = -(K rho + rho K) + 2 sum Sm_j(nu) rho Sp_i(mu)
// with K Hermitian and rates gamma_i = 1 (mu = nu, i = j) and Gamma_ij
// (mu != nu). The recycling sum is applied through the block structure of
// the transition operators rather than by dense products.
class Dissipator {
 public:
  explicit Dissipator(const CouplingSet& couplings);

  Matrix16c apply(const Matrix16c& rho) const;

  const Matrix16c& damping_operator() const { return damping_; }

 private:
  Matrix16c damping_;
  Eigen::Matrix3cd gamma_;
};

// One-shot form of the dissipator; output is Hermitian and traceless for
// Hermitian input.
Matrix16c dissipator(const Matrix16c& rho, const CouplingSet& couplings);

enum class Axis { kX, kY, kZ };

// Spin-1 component on the excited triplet in the m = (-1, 0, +1) ordering,
// zero on the ground level (J = 0). 4x4 single-atom block.
Matrix4c angular_momentum_single(Axis component);

// The same component tensored with the identity on the other atom.
Matrix16c angular_momentum(Axis component, int atom);

// Two-atom rotation unitary
//   W_u(alpha) = exp(-i alpha J1.u) exp(-i alpha J2.u),
// computed by spectral decomposition of the Hermitian single-atom
// generator, so W is unitary to rounding. The axis must be normalized to
// within 1e-12; the ground level is invariant.
Matrix16c rotation_operator(const Eigen::Vector3d& axis, double angle);

// Classical rotation by `angle` around `axis` (Rodrigues form). Same axis
// and angle convention as rotation_operator.
Eigen::Matrix3d rotation_matrix(const Eigen::Vector3d& axis, double angle);

}  // namespace ddpair

#endif  // DDPAIR_OPERATORS_HPP
