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

#ifndef DDPAIR_DYNAMICS_HPP
#define DDPAIR_DYNAMICS_HPP

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ddpair/basis.hpp"
#include "ddpair/coupling.hpp"
#include "ddpair/geometry.hpp"
#include "ddpair/operators.hpp"

namespace ddpair {

using DensityMatrix = Matrix16c;

// Tolerances a propagated state must respect at every sample.
inline constexpr double kHermTol = 1e-10;
inline constexpr double kTraceTol = 1e-8;
inline constexpr double kPositivityTol = 1e-8;

struct StateDiagnostics {
  double trace_error;       // |Tr rho - 1|
  double hermiticity_error; // max |rho - rho^dagger|
  double min_eigenvalue;
};

StateDiagnostics diagnose(const DensityMatrix& rho);

// Named set of product-basis states. Indices distinct, in 0..15.
struct Subspace {
  std::string name;
  std::vector<int> indices;

  Subspace(std::string name, std::vector<int> indices);
};

// The laser-connected subspace {|4,4>, |3,3>, |3,4>, |4,3>} and the
// cross-coupling fed subspace {|1,1>, |1,3>, |3,1>, |1,4>, |4,1>}.
const Subspace& subspace_S();
const Subspace& subspace_V();

// Tr[rho P] for the projector P onto the subspace.
double subspace_population(const DensityMatrix& rho, const Subspace& sub);

// Right-hand side of the master equation at fixed parameters and
// couplings: rho -> -i [H_A + H_dd (+ H_L), rho] + L(rho). Construction
// precomputes the Hamiltonian and the jump structure; application never
// materializes the superoperator.
class Generator {
 public:
  Generator(const SystemParams& params, const CouplingSet& couplings);

  Matrix16c operator()(const Matrix16c& rho) const;

  const Matrix16c& hamiltonian() const { return hamiltonian_; }

 private:
  Matrix16c hamiltonian_;
  Dissipator dissipator_;
};

// One-shot evaluation of the master-equation right-hand side.
Matrix16c generator(const DensityMatrix& rho, const SystemParams& params,
                    const CouplingSet& couplings);

struct EvolveOptions {
  double dt = 1e-3;                // integrator step, units of 1/gamma
  double output_dt = 0.05;         // sampling grid, units of 1/gamma
  bool check_convergence = true;   // re-run at dt/2 and compare observables
  double convergence_tol = 1e-6;
  int max_halvings = 3;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  // Per-sample series: P_S, P_V, P_rest, trace_err, min_eig.
  std::map<std::string, std::vector<double>> observables;

  double max_trace_error = 0.0;
  double min_eigenvalue = 0.0;
  double convergence_delta = 0.0;  // observable shift under the last halving
  double dt_used = 0.0;

  const std::vector<double>& series(const std::string& name) const;
};

// Integrate the master equation with a fixed-step classical fourth-order
// scheme, sampling on the uniform output grid. The step is halved until
// no sampled observable moves by more than convergence_tol; the state
// invariants (trace, Hermiticity, positivity) are checked at every sample
// and a violation throws with the offending time. Trace drift is reported,
// never corrected.
Trajectory evolve(const DensityMatrix& rho0, const SystemParams& params,
                  const Geometry& geom, double t_end,
                  const EvolveOptions& options = {});

// Same, with the couplings supplied directly (e.g. with cross terms
// removed) instead of evaluated from a geometry.
Trajectory evolve(const DensityMatrix& rho0, const SystemParams& params,
                  const CouplingSet& couplings, double t_end,
                  const EvolveOptions& options = {});

// Propagate the same initial state at a geometry and at its rotation by
// (axis, angle), and return the largest entrywise deviation between the
// rotated-geometry solution and the conjugated base solution over all
// samples. Requires the laser off, and delta == 0 unless the axis is ez
// (the free Hamiltonian only commutes with rotations about z when the
// Zeeman splitting is nonzero).
double verify_evolution_equivalence(const Geometry& geom,
                                    const Eigen::Vector3d& axis, double angle,
                                    const SystemParams& params,
                                    const DensityMatrix& rho0, double t_end,
                                    const EvolveOptions& options = {});

}  // namespace ddpair

#endif  // DDPAIR_DYNAMICS_HPP
