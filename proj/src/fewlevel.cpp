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

#include "ddpair/fewlevel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "ddpair/detail/integrate.hpp"
#include "ddpair/spectra.hpp"

namespace ddpair {

namespace {

std::vector<double> sorted_eigenvalues(const Eigen::MatrixXcd& hermitian) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian);
  const auto& vals = solver.eigenvalues();
  return std::vector<double>(vals.data(), vals.data() + vals.size());
}

// Max over eigenvalue index of the spread across the sweep.
double spectrum_variation(const std::vector<std::vector<double>>& spectra) {
  if (spectra.empty()) return 0.0;
  double variation = 0.0;
  for (std::size_t k = 0; k < spectra.front().size(); ++k) {
    double lo = spectra.front()[k];
    double hi = lo;
    for (const auto& spectrum : spectra) {
      lo = std::min(lo, spectrum[k]);
      hi = std::max(hi, spectrum[k]);
    }
    variation = std::max(variation, hi - lo);
  }
  return variation;
}

}  // namespace

TruncationScheme::TruncationScheme(std::vector<int> kept, std::string name_in)
    : kept_levels(std::move(kept)), name(std::move(name_in)) {
  if (kept_levels.empty()) {
    throw std::invalid_argument(
        "TruncationScheme: at least one excited level must be kept");
  }
  std::sort(kept_levels.begin(), kept_levels.end());
  kept_levels.erase(std::unique(kept_levels.begin(), kept_levels.end()),
                    kept_levels.end());
  for (int level : kept_levels) {
    if (level < 1 || level > 3) {
      throw std::invalid_argument(
          "TruncationScheme: kept levels must be a subset of {1, 2, 3}");
    }
  }
}

TruncationScheme TruncationScheme::single(int level) {
  return TruncationScheme({level}, "two-level{" + std::to_string(level) + "}");
}

TruncationScheme TruncationScheme::v_system() {
  return TruncationScheme({1, 3}, "v-system{1,3}");
}

TruncationScheme TruncationScheme::full() {
  return TruncationScheme({1, 2, 3}, "full");
}

bool TruncationScheme::keeps(int level) const {
  return level == kGroundLevel ||
         std::find(kept_levels.begin(), kept_levels.end(), level) !=
             kept_levels.end();
}

std::vector<int> TruncationScheme::kept_product_indices() const {
  std::vector<int> levels = kept_levels;
  levels.push_back(kGroundLevel);
  std::vector<int> indices;
  indices.reserve(levels.size() * levels.size());
  for (int i = 1; i <= kNumLevels; ++i) {
    for (int j = 1; j <= kNumLevels; ++j) {
      if (keeps(i) && keeps(j)) {
        indices.push_back(product_index(i, j));
      }
    }
  }
  return indices;
}

double two_level_splitting(double separation, double theta) {
  if (!(separation > 0.0) || !std::isfinite(separation)) {
    throw std::invalid_argument(
        "two_level_splitting: separation must be finite and > 0");
  }
  const double eta = 2.0 * std::numbers::pi * separation;
  const double f1 = (1.0 / eta - 1.0 / (eta * eta * eta)) * std::cos(eta) -
                    std::sin(eta) / (eta * eta);
  const double f2 = (1.0 / eta - 3.0 / (eta * eta * eta)) * std::cos(eta) -
                    3.0 * std::sin(eta) / (eta * eta);
  const double ct = std::cos(theta);
  const double omega22 = 1.5 * (f1 - ct * ct * f2);
  return 2.0 * std::abs(omega22);
}

SplittingCurve splitting_curve(double separation,
                               std::span<const double> thetas) {
  SplittingCurve curve{separation, {}, {}};
  curve.thetas.assign(thetas.begin(), thetas.end());
  curve.splittings.reserve(thetas.size());
  for (double theta : thetas) {
    curve.splittings.push_back(two_level_splitting(separation, theta));
  }
  return curve;
}

TruncatedModel::TruncatedModel(TruncationScheme scheme, const Geometry& geom,
                               const SystemParams& params)
    : scheme_(std::move(scheme)),
      kept_(scheme_.kept_product_indices()),
      full_generator_(params, coupling_from_tensor(geom)),
      full_hamiltonian_(full_generator_.hamiltonian()),
      full_dipole_hamiltonian_(
          hamiltonian_dipole(coupling_from_tensor(geom))) {}

Eigen::MatrixXcd TruncatedModel::restricted(const Matrix16c& full) const {
  const int n = dim();
  Eigen::MatrixXcd reduced(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      reduced(r, c) = full(kept_[r], kept_[c]);
    }
  }
  return reduced;
}

Matrix16c TruncatedModel::embedded(const Eigen::MatrixXcd& reduced) const {
  const int n = dim();
  if (reduced.rows() != n || reduced.cols() != n) {
    throw std::invalid_argument("TruncatedModel: reduced state has dimension " +
                                std::to_string(reduced.rows()) + ", expected " +
                                std::to_string(n));
  }
  Matrix16c full = Matrix16c::Zero();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      full(kept_[r], kept_[c]) = reduced(r, c);
    }
  }
  return full;
}

Eigen::MatrixXcd TruncatedModel::hamiltonian() const {
  return restricted(full_hamiltonian_);
}

Eigen::MatrixXcd TruncatedModel::dipole_hamiltonian() const {
  return restricted(full_dipole_hamiltonian_);
}

std::vector<double> TruncatedModel::dipole_spectrum() const {
  return sorted_eigenvalues(dipole_hamiltonian());
}

Eigen::MatrixXcd TruncatedModel::apply(const Eigen::MatrixXcd& rho) const {
  return restricted(full_generator_(embedded(rho)));
}

ReducedTrajectory TruncatedModel::evolve(const Eigen::MatrixXcd& rho0,
                                         double t_end,
                                         const EvolveOptions& options) const {
  const auto rhs = [this](const Eigen::MatrixXcd& rho) { return apply(rho); };
  const int samples =
      static_cast<int>(std::floor(t_end / options.output_dt + 1e-9));
  ReducedTrajectory traj;
  traj.times.reserve(samples + 1);
  traj.states.reserve(samples + 1);
  Eigen::MatrixXcd rho = rho0;
  for (int k = 0; k <= samples; ++k) {
    if (k > 0) {
      rho = detail::advance_interval(rho, options.output_dt, options.dt, rhs);
    }
    traj.times.push_back(k * options.output_dt);
    traj.states.push_back(rho);
  }
  return traj;
}

BreakdownReport breakdown_report(const TruncationScheme& scheme,
                                 double separation,
                                 std::span<const double> thetas) {
  SystemParams degenerate;  // delta = 0, no drive: the invariance baseline
  BreakdownReport report{scheme, separation, {}, {}, {}, {}, 0.0, 0.0};
  report.thetas.assign(thetas.begin(), thetas.end());
  for (double theta : thetas) {
    const Geometry geom(separation, theta, 0.0);
    report.full_spectra.push_back(spectrum_dipole(geom).eigenvalues);
    const TruncatedModel model(scheme, geom, degenerate);
    report.truncated_spectra.push_back(model.dipole_spectrum());
    report.splittings.push_back(two_level_splitting(separation, theta));
  }
  report.full_variation = spectrum_variation(report.full_spectra);
  report.truncated_variation = spectrum_variation(report.truncated_spectra);
  return report;
}

DecouplingReport large_delta_decoupling_check(
    const Geometry& geom, const SystemParams& drive,
    std::span<const double> multipliers, double t_end,
    const EvolveOptions& options) {
  const CouplingSet couplings = coupling_from_tensor(geom);
  const CouplingSet diagonal = couplings.diagonal_only();

  DecouplingReport report;
  report.max_cross_coupling = couplings.max_cross_coupling();
  // Degenerate cross-free geometries get the splitting stepped in units of
  // gamma so the check stays meaningful.
  const double scale =
      report.max_cross_coupling > 1e-15 ? report.max_cross_coupling : 1.0;

  const DensityMatrix ground =
      product_ket(4, 4) * product_ket(4, 4).adjoint();
  for (double multiplier : multipliers) {
    SystemParams params = drive;
    params.delta = multiplier * scale;
    const Trajectory full = evolve(ground, params, couplings, t_end, options);
    const Trajectory crossless =
        evolve(ground, params, diagonal, t_end, options);
    double deviation = 0.0;
    const auto& full_ps = full.series("P_S");
    const auto& crossless_ps = crossless.series("P_S");
    for (std::size_t k = 0; k < full_ps.size(); ++k) {
      deviation = std::max(deviation, std::abs(full_ps[k] - crossless_ps[k]));
    }
    report.entries.push_back({multiplier, params.delta, deviation});
  }

  report.monotone_decreasing = true;
  const DecouplingEntry* previous = nullptr;
  for (const auto& entry : report.entries) {
    if (entry.multiplier < 10.0) continue;
    if (previous != nullptr && entry.max_deviation >= previous->max_deviation) {
      report.monotone_decreasing = false;
    }
    previous = &entry;
  }
  return report;
}

}  // namespace ddpair
