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

#ifndef DDPAIR_FEWLEVEL_HPP
#define DDPAIR_FEWLEVEL_HPP

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ddpair/dynamics.hpp"

namespace ddpair {

// A few-level approximation: the subset of excited sublevels kept in each
// atom (the same subset for both). The ground level is always kept.
struct TruncationScheme {
  std::vector<int> kept_levels;  // nonempty, sorted subset of {1, 2, 3}
  std::string name;

  TruncationScheme(std::vector<int> kept, std::string name);

  static TruncationScheme single(int level);  // two-level atom
  static TruncationScheme v_system();         // levels {1, 3}
  static TruncationScheme full();             // identity truncation

  bool keeps(int level) const;

  // Product-basis indices (ascending) of the retained two-atom states.
  std::vector<int> kept_product_indices() const;
};

// Splitting 2|Omega_22| of the pi-transition pair states predicted by the
// two-level reduction,
//   Omega_22 = (3/2) [f1(eta) - cos^2(theta) f2(eta)],
// evaluated from the trigonometric closed form. Carries the spurious
// cos^2(theta) orientation dependence that the full multiplet does not.
double two_level_splitting(double separation, double theta);

struct SplittingCurve {
  double separation;
  std::vector<double> thetas;
  std::vector<double> splittings;  // 2|Omega_22| per theta
};

SplittingCurve splitting_curve(double separation, std::span<const double> thetas);

struct ReducedTrajectory {
  std::vector<double> times;
  std::vector<Eigen::MatrixXcd> states;
};

// Generator of a truncated model, obtained from the full model by deleting
// every operator that references a dropped level. Implemented as
// restriction: embed the reduced state into the full space, apply the full
// generator, and restrict back to the kept block -- which is exactly the
// restricted-sum master equation on the retained states. The reduced basis
// ordering mirrors the full ordering restricted to kept indices, and the
// identity truncation reproduces the full generator bit for bit.
class TruncatedModel {
 public:
  TruncatedModel(TruncationScheme scheme, const Geometry& geom,
                 const SystemParams& params);

  const TruncationScheme& scheme() const { return scheme_; }
  int dim() const { return static_cast<int>(kept_.size()); }
  const std::vector<int>& kept_indices() const { return kept_; }

  Eigen::MatrixXcd restricted(const Matrix16c& full) const;
  Matrix16c embedded(const Eigen::MatrixXcd& reduced) const;

  // Reduced Hamiltonian (atomic + dipole-dipole + laser).
  Eigen::MatrixXcd hamiltonian() const;

  // Reduced dipole-dipole Hamiltonian and its sorted eigenvalues.
  Eigen::MatrixXcd dipole_hamiltonian() const;
  std::vector<double> dipole_spectrum() const;

  // Reduced master-equation right-hand side.
  Eigen::MatrixXcd apply(const Eigen::MatrixXcd& rho) const;

  // Fixed-step integration on the reduced space (same scheme and sampling
  // as dynamics::evolve; no convergence re-run).
  ReducedTrajectory evolve(const Eigen::MatrixXcd& rho0, double t_end,
                           const EvolveOptions& options = {}) const;

 private:
  TruncationScheme scheme_;
  std::vector<int> kept_;
  Generator full_generator_;
  Matrix16c full_hamiltonian_;
  Matrix16c full_dipole_hamiltonian_;
};

struct BreakdownReport {
  TruncationScheme scheme;
  double separation;
  std::vector<double> thetas;
  std::vector<std::vector<double>> full_spectra;       // 16 per theta
  std::vector<std::vector<double>> truncated_spectra;  // dim per theta
  std::vector<double> splittings;                      // 2|Omega_22|
  double full_variation;       // max spread of any full eigenvalue
  double truncated_variation;  // max spread of any truncated eigenvalue
};

// Sweep theta at fixed separation (degenerate multiplet, no drive) and
// tabulate the dipole-dipole spectra of the full and truncated models.
// The full spectrum is orientation independent; a truncating scheme that
// drops sublevels generally is not.
BreakdownReport breakdown_report(const TruncationScheme& scheme,
                                 double separation,
                                 std::span<const double> thetas);

struct DecouplingEntry {
  double multiplier;     // delta in units of the largest cross coupling
  double delta;
  double max_deviation;  // max |P_S(full) - P_S(no cross terms)| over the run
};

struct DecouplingReport {
  double max_cross_coupling;
  std::vector<DecouplingEntry> entries;
  bool monotone_decreasing;  // over the entries with multiplier >= 10
};

// Drive the pair with and without the cross couplings while stepping the
// Zeeman splitting through multiples of the largest cross-coupling
// magnitude. The deviation between the two models must shrink as the
// splitting grows, since the cross terms rotate at +-delta and +-2*delta.
// If the geometry has no cross couplings the multiples are taken of gamma
// instead and the deviation stays at rounding level.
DecouplingReport large_delta_decoupling_check(
    const Geometry& geom, const SystemParams& drive,
    std::span<const double> multipliers, double t_end,
    const EvolveOptions& options = {});

}  // namespace ddpair

#endif  // DDPAIR_FEWLEVEL_HPP
