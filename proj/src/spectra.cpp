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

#include "ddpair/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ddpair/operators.hpp"

namespace ddpair {

namespace {

std::vector<double> sorted_eigenvalues(const Eigen::MatrixXcd& hermitian) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian);
  const auto& vals = solver.eigenvalues();
  return std::vector<double>(vals.data(), vals.data() + vals.size());
}

}  // namespace

const CollectiveBasis& CollectiveBasis::standard() {
  static const CollectiveBasis basis = [] {
    CollectiveBasis b;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int i = 1; i <= 3; ++i) {
      const Vector16c excited_first = product_ket(i, 4);
      const Vector16c excited_second = product_ket(4, i);
      b.s_states[i - 1] = inv_sqrt2 * (excited_first + excited_second);
      b.a_states[i - 1] = inv_sqrt2 * (excited_first - excited_second);
    }
    b.ground = product_ket(4, 4);
    int k = 0;
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        b.doubly_excited[k++] = product_ket(i, j);
      }
    }
    return b;
  }();
  return basis;
}

Eigen::Matrix3cd block_matrix_symmetric(const CouplingSet& couplings) {
  return -couplings.omega;
}

SpectrumReport spectrum_dipole(const Geometry& geom) {
  const CouplingSet couplings = coupling_from_tensor(geom);
  SpectrumReport report{geom, {}, {}, {}};
  report.eigenvalues = sorted_eigenvalues(hamiltonian_dipole(couplings));
  report.symmetric_block = sorted_eigenvalues(block_matrix_symmetric(couplings));
  report.antisymmetric_block =
      sorted_eigenvalues(-block_matrix_symmetric(couplings));
  return report;
}

SpectrumReport spectrum_full(const Geometry& geom, double delta) {
  SystemParams params;
  params.delta = delta;
  const Matrix16c h = hamiltonian_atomic(params) +
                      hamiltonian_dipole(coupling_from_tensor(geom));
  SpectrumReport report{geom, {}, {}, {}};
  report.eigenvalues = sorted_eigenvalues(h);
  return report;
}

std::array<Vector16c, 6> eigenstates_rotated(const Geometry& geom_z,
                                             const Eigen::Vector3d& axis,
                                             double angle) {
  if (geom_z.theta() != 0.0) {
    throw std::invalid_argument(
        "eigenstates_rotated: reference geometry must be aligned with z "
        "(theta == 0)");
  }
  const Matrix16c w = rotation_operator(axis, angle);
  const CollectiveBasis& basis = CollectiveBasis::standard();
  std::array<Vector16c, 6> out;
  for (int i = 0; i < 3; ++i) {
    out[i] = w * basis.s_states[i];
    out[i + 3] = w * basis.a_states[i];
  }
  return out;
}

double spectrum_distance(const std::vector<double>& a,
                         const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("spectrum_distance: size mismatch");
  }
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    d = std::max(d, std::abs(a[k] - b[k]));
  }
  return d;
}

}  // namespace ddpair
