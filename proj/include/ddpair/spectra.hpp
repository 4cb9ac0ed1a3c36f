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

#ifndef DDPAIR_SPECTRA_HPP
#define DDPAIR_SPECTRA_HPP

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "ddpair/basis.hpp"
#include "ddpair/coupling.hpp"
#include "ddpair/geometry.hpp"

namespace ddpair {

// Collective two-atom basis: the single-excitation symmetric states
// |s_i> = (|i,4> + |4,i>)/sqrt(2), the antisymmetric states
// |a_i> = (|i,4> - |4,i>)/sqrt(2), the ground state |4,4>, and the nine
// doubly excited states |i,j> with i, j <= 3. Orthonormal, 16 vectors.
struct CollectiveBasis {
  std::array<Vector16c, 3> s_states;
  std::array<Vector16c, 3> a_states;
  Vector16c ground;
  std::array<Vector16c, 9> doubly_excited;

  static const CollectiveBasis& standard();
};

// Sorted eigenvalues of a pair Hamiltonian at one geometry. For the bare
// dipole-dipole Hamiltonian the six nonzero eigenvalues split into a
// symmetric and an antisymmetric triple with opposite signs; those block
// eigenvalues are recorded when applicable (empty otherwise).
struct SpectrumReport {
  Geometry geometry;
  std::vector<double> eigenvalues;         // ascending, 16 entries
  std::vector<double> symmetric_block;     // ascending, 3 entries
  std::vector<double> antisymmetric_block; // ascending, 3 entries
};

// Matrix of the dipole-dipole Hamiltonian in the symmetric subspace
// {|s_1>, |s_2>, |s_3>}: just -Omega. The antisymmetric block is its
// negative.
Eigen::Matrix3cd block_matrix_symmetric(const CouplingSet& couplings);

// Spectrum of the dipole-dipole Hamiltonian alone: six nonzero eigenvalues
// in +/- pairs plus ten zeros. Depends only on the separation, not on the
// orientation.
SpectrumReport spectrum_dipole(const Geometry& geom);

// Spectrum of the undriven pair Hamiltonian including the Zeeman ladder
// (detuning zero, laser off).
SpectrumReport spectrum_full(const Geometry& geom, double delta);

// Eigenvectors of the dipole-dipole Hamiltonian at the rotated geometry
// obtained by applying W_u(angle) to the symmetric/antisymmetric states of
// the z-aligned geometry. Returns {W s_1, W s_2, W s_3, W a_1, W a_2,
// W a_3}; the eigenvalues are -Omega_ii(R ez) and +Omega_ii(R ez).
// Requires geom_z.theta() == 0.
std::array<Vector16c, 6> eigenstates_rotated(const Geometry& geom_z,
                                             const Eigen::Vector3d& axis,
                                             double angle);

// Largest absolute difference between two ascending eigenvalue lists.
double spectrum_distance(const std::vector<double>& a,
                         const std::vector<double>& b);

}  // namespace ddpair

#endif  // DDPAIR_SPECTRA_HPP
