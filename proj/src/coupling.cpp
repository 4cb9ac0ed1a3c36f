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

#include "ddpair/coupling.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace ddpair {

namespace {

using std::complex;

constexpr complex<double> kI{0.0, 1.0};

complex<double> g1(double eta) {
  return 1.0 / eta + kI / (eta * eta) - 1.0 / (eta * eta * eta);
}

complex<double> g2(double eta) {
  return 1.0 / eta + 3.0 * kI / (eta * eta) - 3.0 / (eta * eta * eta);
}

}  // namespace

const DipoleSet& DipoleSet::standard() {
  static const DipoleSet set = [] {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    DipoleSet s;
    s.d1 = Eigen::Vector3cd(inv_sqrt2, kI * inv_sqrt2, 0.0);
    s.d2 = Eigen::Vector3cd(0.0, 0.0, 1.0);
    s.d3 = Eigen::Vector3cd(-inv_sqrt2, kI * inv_sqrt2, 0.0);
    return s;
  }();
  return set;
}

const Eigen::Vector3cd& DipoleSet::d(int i) const {
  switch (i) {
    case 1: return d1;
    case 2: return d2;
    case 3: return d3;
    default:
      throw std::invalid_argument("DipoleSet: transition index must be 1..3");
  }
}

double CouplingSet::max_cross_coupling() const {
  double m = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      m = std::max({m, std::abs(omega(i, j)), std::abs(gamma(i, j))});
    }
  }
  return m;
}

CouplingSet CouplingSet::diagonal_only() const {
  CouplingSet out;
  out.omega = omega.diagonal().asDiagonal();
  out.gamma = gamma.diagonal().asDiagonal();
  return out;
}

ChiTensor chi_tensor(const Geometry& geom) {
  const double eta = geom.eta();
  const Eigen::Vector3d rhat = geom.cartesian() / geom.separation();
  const complex<double> phase = std::exp(kI * eta);

  Eigen::Matrix3cd chi =
      g1(eta) * Eigen::Matrix3cd::Identity() -
      g2(eta) * (rhat * rhat.transpose()).cast<complex<double>>();
  chi *= 1.5 * phase;
  return ChiTensor{chi};
}

CouplingSet coupling_from_tensor(const Geometry& geom) {
  const ChiTensor chi = chi_tensor(geom);
  const Eigen::Matrix3cd chi_re = chi.real_part().cast<complex<double>>();
  const Eigen::Matrix3cd chi_im = chi.imag_part().cast<complex<double>>();
  const DipoleSet& dip = DipoleSet::standard();

  CouplingSet out;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const Eigen::Vector3cd dj_conj = dip.d(j).conjugate();
      out.omega(i - 1, j - 1) = dip.d(i).transpose() * chi_re * dj_conj;
      out.gamma(i - 1, j - 1) = dip.d(i).transpose() * chi_im * dj_conj;
    }
  }
  return out;
}

CouplingSet coupling_closed_form(const Geometry& geom) {
  const double eta = geom.eta();
  const double theta = geom.theta();
  const double phi = geom.phi();
  const double eta3 = eta * eta * eta;
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  const double ce = std::cos(eta);
  const double se = std::sin(eta);

  // Angular prefactors of the i=3, j=1 cross terms before the sin^2(theta)
  // factor; the cot(theta) products below reduce to sin*cos and cos^2.
  const double c31_omega = 0.75 / eta3 * ((eta * eta - 3.0) * ce - 3.0 * eta * se);
  const double c31_gamma = 0.75 / eta3 * ((eta * eta - 3.0) * se + 3.0 * eta * ce);

  const double ladder =
      3.0 * eta * eta - 1.0 + (eta * eta - 3.0) * std::cos(2.0 * theta);
  const double tilt = eta * (1.0 + 3.0 * std::cos(2.0 * theta));
  const double omega11 = 3.0 / (8.0 * eta3) * (ladder * ce - tilt * se);
  const double gamma11 = 3.0 / (8.0 * eta3) * (ladder * se + tilt * ce);

  const complex<double> e_m2phi = std::exp(-2.0 * kI * phi);
  const complex<double> e_m1phi = std::exp(-kI * phi);

  const complex<double> omega31 = c31_omega * st * st * e_m2phi;
  const complex<double> gamma31 = c31_gamma * st * st * e_m2phi;
  const complex<double> omega21 = -std::sqrt(2.0) * st * ct * c31_omega * e_m1phi;
  const complex<double> gamma21 = -std::sqrt(2.0) * st * ct * c31_gamma * e_m1phi;
  const double omega22 = omega11 - (2.0 * ct * ct - st * st) * c31_omega;
  const double gamma22 = gamma11 - (2.0 * ct * ct - st * st) * c31_gamma;
  const complex<double> omega32 = -omega21;
  const complex<double> gamma32 = -gamma21;
  const double omega33 = omega11;
  const double gamma33 = gamma11;

  CouplingSet out;
  out.omega << omega11, std::conj(omega21), std::conj(omega31),
               omega21, omega22,            std::conj(omega32),
               omega31, omega32,            omega33;
  out.gamma << gamma11, std::conj(gamma21), std::conj(gamma31),
               gamma21, gamma22,            std::conj(gamma32),
               gamma31, gamma32,            gamma33;
  return out;
}

}  // namespace ddpair
