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

#include "ddpair/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "ddpair/detail/integrate.hpp"

namespace ddpair {

namespace {

constexpr Complex kI{0.0, 1.0};

int output_sample_count(double t_end, double output_dt) {
  if (!(t_end > 0.0) || !(output_dt > 0.0)) {
    throw std::invalid_argument("evolve: t_end and output_dt must be > 0");
  }
  return static_cast<int>(std::floor(t_end / output_dt + 1e-9));
}

void check_state_invariants(const StateDiagnostics& diag, double t) {
  std::ostringstream msg;
  if (!std::isfinite(diag.trace_error) || !std::isfinite(diag.hermiticity_error) ||
      !std::isfinite(diag.min_eigenvalue)) {
    msg << "density matrix became non-finite at t=" << t
        << "; reduce the integrator step";
  } else if (diag.hermiticity_error > kHermTol) {
    msg << "density matrix lost Hermiticity at t=" << t << " (error "
        << diag.hermiticity_error << ")";
  } else if (diag.trace_error > kTraceTol) {
    msg << "density matrix trace drifted at t=" << t << " (|Tr-1| = "
        << diag.trace_error << "); reduce the integrator step";
  } else if (diag.min_eigenvalue < -kPositivityTol) {
    msg << "density matrix lost positivity at t=" << t << " (min eigenvalue "
        << diag.min_eigenvalue << ")";
  } else {
    return;
  }
  throw std::runtime_error("evolve: " + msg.str());
}

}  // namespace

StateDiagnostics diagnose(const DensityMatrix& rho) {
  StateDiagnostics diag;
  diag.trace_error = std::abs(rho.trace() - Complex(1.0, 0.0));
  diag.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Matrix16c> solver(rho,
                                                  Eigen::EigenvaluesOnly);
  diag.min_eigenvalue = solver.eigenvalues().minCoeff();
  return diag;
}

Subspace::Subspace(std::string name_in, std::vector<int> indices_in)
    : name(std::move(name_in)), indices(std::move(indices_in)) {
  std::set<int> seen;
  for (int idx : indices) {
    if (idx < 0 || idx >= kDim) {
      throw std::invalid_argument("Subspace: index out of range 0..15");
    }
    if (!seen.insert(idx).second) {
      throw std::invalid_argument("Subspace: duplicate index");
    }
  }
}

const Subspace& subspace_S() {
  static const Subspace s("S", {product_index(4, 4), product_index(3, 3),
                                product_index(3, 4), product_index(4, 3)});
  return s;
}

const Subspace& subspace_V() {
  static const Subspace v("V", {product_index(1, 1), product_index(1, 3),
                                product_index(3, 1), product_index(1, 4),
                                product_index(4, 1)});
  return v;
}

double subspace_population(const DensityMatrix& rho, const Subspace& sub) {
  double population = 0.0;
  for (int idx : sub.indices) {
    population += rho(idx, idx).real();
  }
  return population;
}

Generator::Generator(const SystemParams& params, const CouplingSet& couplings)
    : dissipator_(couplings) {
  params.validate();
  hamiltonian_ = hamiltonian_atomic(params) + hamiltonian_dipole(couplings);
  if (params.laser_on) {
    hamiltonian_ += hamiltonian_laser(params);
  }
}

Matrix16c Generator::operator()(const Matrix16c& rho) const {
  Matrix16c out = -kI * (hamiltonian_ * rho - rho * hamiltonian_);
  out += dissipator_.apply(rho);
  return out;
}

Matrix16c generator(const DensityMatrix& rho, const SystemParams& params,
                    const CouplingSet& couplings) {
  return Generator(params, couplings)(rho);
}

namespace {

Trajectory evolve_fixed_step(const DensityMatrix& rho0, const Generator& gen,
                             double t_end, double output_dt, double dt) {
  const int samples = output_sample_count(t_end, output_dt);
  const auto rhs = [&gen](const Matrix16c& rho) { return gen(rho); };

  Trajectory traj;
  traj.dt_used = dt;
  traj.times.reserve(samples + 1);
  traj.states.reserve(samples + 1);
  auto& ps = traj.observables["P_S"];
  auto& pv = traj.observables["P_V"];
  auto& prest = traj.observables["P_rest"];
  auto& trace_err = traj.observables["trace_err"];
  auto& min_eig = traj.observables["min_eig"];

  traj.max_trace_error = 0.0;
  traj.min_eigenvalue = 1.0;

  DensityMatrix rho = rho0;
  for (int k = 0; k <= samples; ++k) {
    const double t = k * output_dt;
    if (k > 0) {
      rho = detail::advance_interval(rho, output_dt, dt, rhs);
    }
    const StateDiagnostics diag = diagnose(rho);
    check_state_invariants(diag, t);

    const double pop_s = subspace_population(rho, subspace_S());
    const double pop_v = subspace_population(rho, subspace_V());
    traj.times.push_back(t);
    traj.states.push_back(rho);
    ps.push_back(pop_s);
    pv.push_back(pop_v);
    prest.push_back(rho.trace().real() - pop_s - pop_v);
    trace_err.push_back(diag.trace_error);
    min_eig.push_back(diag.min_eigenvalue);
    traj.max_trace_error = std::max(traj.max_trace_error, diag.trace_error);
    traj.min_eigenvalue = std::min(traj.min_eigenvalue, diag.min_eigenvalue);
  }
  return traj;
}

// Largest shift of any reported population series between two runs on the
// same output grid, and the time where it occurs.
std::pair<double, double> observable_shift(const Trajectory& a,
                                           const Trajectory& b) {
  double shift = 0.0;
  double at_time = 0.0;
  for (const char* name : {"P_S", "P_V", "P_rest"}) {
    const auto& sa = a.series(name);
    const auto& sb = b.series(name);
    for (std::size_t k = 0; k < sa.size(); ++k) {
      const double d = std::abs(sa[k] - sb[k]);
      if (d > shift) {
        shift = d;
        at_time = a.times[k];
      }
    }
  }
  return {shift, at_time};
}

}  // namespace

const std::vector<double>& Trajectory::series(const std::string& name) const {
  const auto it = observables.find(name);
  if (it == observables.end()) {
    throw std::invalid_argument("Trajectory: no observable named " + name);
  }
  return it->second;
}

Trajectory evolve(const DensityMatrix& rho0, const SystemParams& params,
                  const Geometry& geom, double t_end,
                  const EvolveOptions& options) {
  return evolve(rho0, params, coupling_from_tensor(geom), t_end, options);
}

Trajectory evolve(const DensityMatrix& rho0, const SystemParams& params,
                  const CouplingSet& couplings, double t_end,
                  const EvolveOptions& options) {
  if (!(options.dt > 0.0)) {
    throw std::invalid_argument("evolve: dt must be > 0");
  }
  const StateDiagnostics initial = diagnose(rho0);
  if (initial.hermiticity_error > kHermTol ||
      initial.trace_error > kTraceTol ||
      initial.min_eigenvalue < -kPositivityTol) {
    throw std::invalid_argument("evolve: initial state is not a density matrix");
  }

  const Generator gen(params, couplings);
  double dt = options.dt;
  Trajectory coarse =
      evolve_fixed_step(rho0, gen, t_end, options.output_dt, dt);
  if (!options.check_convergence) {
    coarse.convergence_delta = 0.0;
    return coarse;
  }

  double worst_shift = 0.0;
  double worst_time = 0.0;
  for (int round = 0; round < options.max_halvings; ++round) {
    Trajectory fine =
        evolve_fixed_step(rho0, gen, t_end, options.output_dt, dt / 2.0);
    const auto [shift, at_time] = observable_shift(coarse, fine);
    if (shift < options.convergence_tol) {
      fine.convergence_delta = shift;
      return fine;
    }
    worst_shift = shift;
    worst_time = at_time;
    dt /= 2.0;
    coarse = std::move(fine);
  }
  std::ostringstream msg;
  msg << "evolve: step-halving did not converge below "
      << options.convergence_tol << " (observable still moved by "
      << worst_shift << " at t=" << worst_time << " with dt=" << dt << ")";
  throw std::runtime_error(msg.str());
}

double verify_evolution_equivalence(const Geometry& geom,
                                    const Eigen::Vector3d& axis, double angle,
                                    const SystemParams& params,
                                    const DensityMatrix& rho0, double t_end,
                                    const EvolveOptions& options) {
  if (params.laser_on && params.omega_L != 0.0) {
    throw std::invalid_argument(
        "verify_evolution_equivalence: requires the laser off; the drive "
        "Hamiltonian does not commute with the rotation");
  }
  const bool z_axis = std::abs(std::abs(axis.z()) - 1.0) < 1e-12;
  if (params.delta != 0.0 && !z_axis) {
    throw std::invalid_argument(
        "verify_evolution_equivalence: with delta != 0 the free Hamiltonian "
        "commutes only with rotations about the z axis; pass axis = ez or "
        "set delta = 0");
  }

  const Matrix16c w = rotation_operator(axis, angle);
  const Geometry rotated =
      Geometry::from_cartesian(rotation_matrix(axis, angle) * geom.cartesian());

  const Trajectory base = evolve(rho0, params, geom, t_end, options);
  const DensityMatrix rho0_rotated = w * rho0 * w.adjoint();
  const Trajectory moved = evolve(rho0_rotated, params, rotated, t_end, options);

  double deviation = 0.0;
  const std::size_t samples = std::min(base.states.size(), moved.states.size());
  for (std::size_t k = 0; k < samples; ++k) {
    const Matrix16c conjugated = w * base.states[k] * w.adjoint();
    deviation = std::max(
        deviation, (moved.states[k] - conjugated).cwiseAbs().maxCoeff());
  }
  return deviation;
}

}  // namespace ddpair
