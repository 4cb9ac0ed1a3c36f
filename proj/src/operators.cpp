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

#include "ddpair/operators.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace ddpair {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_atom(int atom) {
  if (atom != 1 && atom != 2) {
    throw std::invalid_argument("atom index must be 1 or 2");
  }
}

Matrix4c single_transition(int level, Direction dir) {
  if (level < 1 || level > 3) {
    throw std::invalid_argument("transition level must be 1..3");
  }
  Matrix4c op = Matrix4c::Zero();
  if (dir == Direction::kRaise) {
    op(level - 1, kGroundLevel - 1) = 1.0;
  } else {
    op(kGroundLevel - 1, level - 1) = 1.0;
  }
  return op;
}

Matrix16c lift(const Matrix4c& op, int atom) {
  check_atom(atom);
  const Matrix4c id = Matrix4c::Identity();
  return atom == 1 ? Eigen::kroneckerProduct(op, id).eval()
                   : Eigen::kroneckerProduct(id, op).eval();
}

}  // namespace

Vector16c product_ket(int level_atom1, int level_atom2) {
  if (!is_valid_level(level_atom1) || !is_valid_level(level_atom2)) {
    throw std::invalid_argument("product_ket: level indices must be 1..4");
  }
  Vector16c v = Vector16c::Zero();
  v(product_index(level_atom1, level_atom2)) = 1.0;
  return v;
}

void SystemParams::validate() const {
  if (!std::isfinite(delta) || !std::isfinite(omega_L) ||
      !std::isfinite(detuning)) {
    throw std::invalid_argument("SystemParams: fields must be finite");
  }
  if (omega_L < 0.0) {
    throw std::invalid_argument("SystemParams: omega_L must be >= 0");
  }
}

Matrix16c transition_operator(int atom, int level, Direction dir) {
  return lift(single_transition(level, dir), atom);
}

Matrix16c hamiltonian_atomic(const SystemParams& params) {
  params.validate();
  const double detuning = params.laser_on ? params.detuning : 0.0;
  Matrix16c h = Matrix16c::Zero();
  for (int atom = 1; atom <= 2; ++atom) {
    for (int level = 1; level <= 3; ++level) {
      const double m = static_cast<double>(level - 2);
      const double energy = -detuning + m * params.delta;
      const Matrix16c raise = transition_operator(atom, level, Direction::kRaise);
      h += energy * raise * raise.adjoint();
    }
  }
  return h;
}

Matrix16c hamiltonian_dipole(const CouplingSet& couplings) {
  Matrix16c h = Matrix16c::Zero();
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const Matrix16c hop =
          transition_operator(2, i, Direction::kRaise) *
          transition_operator(1, j, Direction::kLower);
      const Matrix16c term = couplings.omega(i - 1, j - 1) * hop;
      h -= term + term.adjoint();
    }
  }
  return h;
}

Matrix16c hamiltonian_laser(const SystemParams& params) {
  params.validate();
  Matrix16c h = Matrix16c::Zero();
  for (int atom = 1; atom <= 2; ++atom) {
    const Matrix16c raise = transition_operator(atom, 3, Direction::kRaise);
    h += params.omega_L * (raise + raise.adjoint());
  }
  return h;
}

Dissipator::Dissipator(const CouplingSet& couplings)
    : gamma_(couplings.gamma) {
  // Damping operator K = sum Sp_i(mu) [gamma_i Sm_i(mu) +
  // sum_j Gamma_ij Sm_j(other)]; Hermitian since Gamma is.
  damping_ = Matrix16c::Zero();
  for (int atom = 1; atom <= 2; ++atom) {
    const int other = 3 - atom;
    for (int i = 1; i <= 3; ++i) {
      Matrix16c lowering = transition_operator(atom, i, Direction::kLower);
      for (int j = 1; j <= 3; ++j) {
        lowering += couplings.gamma(i - 1, j - 1) *
                    transition_operator(other, j, Direction::kLower);
      }
      damping_ += transition_operator(atom, i, Direction::kRaise) * lowering;
    }
  }
}

Matrix16c Dissipator::apply(const Matrix16c& rho) const {
  Matrix16c out = -(damping_ * rho) - rho * damping_;

  // Recycling terms 2 Sm_j(nu) rho Sp_i(mu). Every Sm/Sp only relabels one
  // atom's level, so each term is a weighted 4x4 block gather; indices
  // below are zero based with g the ground level and i, j excited.
  constexpr int g = kGroundLevel - 1;
  const auto idx = [](int a, int b) { return kNumLevels * a + b; };
  for (int i = 0; i < 3; ++i) {
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        // Single-atom decay, gamma_i = 1: Sm_i(mu) rho Sp_i(mu).
        out(idx(g, a), idx(g, b)) += 2.0 * rho(idx(i, a), idx(i, b));
        out(idx(a, g), idx(b, g)) += 2.0 * rho(idx(a, i), idx(b, i));
        for (int j = 0; j < 3; ++j) {
          const Complex weight = 2.0 * gamma_(i, j);
          // Gamma_ij Sm_j(2) rho Sp_i(1) and Gamma_ij Sm_j(1) rho Sp_i(2).
          out(idx(a, g), idx(g, b)) += weight * rho(idx(a, j), idx(i, b));
          out(idx(g, a), idx(b, g)) += weight * rho(idx(j, a), idx(b, i));
        }
      }
    }
  }
  return out;
}

Matrix16c dissipator(const Matrix16c& rho, const CouplingSet& couplings) {
  return Dissipator(couplings).apply(rho);
}

Matrix4c angular_momentum_single(Axis component) {
  // J+ = sqrt(2) (|2><1| + |3><2|) on the m = (-1, 0, +1) triplet.
  Matrix4c jp = Matrix4c::Zero();
  jp(1, 0) = std::sqrt(2.0);
  jp(2, 1) = std::sqrt(2.0);
  switch (component) {
    case Axis::kX: return 0.5 * (jp + jp.adjoint()).eval();
    case Axis::kY: return (-0.5 * kI) * (jp - jp.adjoint()).eval();
    case Axis::kZ: {
      Matrix4c jz = Matrix4c::Zero();
      jz(0, 0) = -1.0;
      jz(2, 2) = 1.0;
      return jz;
    }
  }
  throw std::invalid_argument("angular_momentum_single: bad axis");
}

Matrix16c angular_momentum(Axis component, int atom) {
  return lift(angular_momentum_single(component), atom);
}

Eigen::Matrix3d rotation_matrix(const Eigen::Vector3d& axis, double angle) {
  if (std::abs(axis.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("rotation_matrix: axis must be a unit vector");
  }
  Eigen::Matrix3d cross;
  cross <<        0.0, -axis.z(),  axis.y(),
             axis.z(),       0.0, -axis.x(),
            -axis.y(),  axis.x(),       0.0;
  return Eigen::Matrix3d::Identity() + std::sin(angle) * cross +
         (1.0 - std::cos(angle)) * (cross * cross);
}

Matrix16c rotation_operator(const Eigen::Vector3d& axis, double angle) {
  if (std::abs(axis.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("rotation_operator: axis must be a unit vector");
  }
  const Matrix4c generator = axis.x() * angular_momentum_single(Axis::kX) +
                             axis.y() * angular_momentum_single(Axis::kY) +
                             axis.z() * angular_momentum_single(Axis::kZ);
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(generator);
  const Eigen::Vector4d phases = solver.eigenvalues();
  Eigen::Vector4cd exponentials;
  for (int k = 0; k < 4; ++k) {
    exponentials(k) = std::exp(-kI * angle * phases(k));
  }
  const Matrix4c single = solver.eigenvectors() *
                          exponentials.asDiagonal() *
                          solver.eigenvectors().adjoint();
  return Eigen::kroneckerProduct(single, single);
}

}  // namespace ddpair
