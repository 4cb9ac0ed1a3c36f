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

#include <cmath>
#include <complex>
#include <numbers>

#include <catch2/catch_amalgamated.hpp>

#include "ddpair/coupling.hpp"
#include "ddpair/random.hpp"

using namespace ddpair;

namespace {

constexpr double kPi = std::numbers::pi;

// Pass if close in absolute terms near zero or in relative terms otherwise.
bool mixed_close(Complex a, Complex b, double rel = 1e-12, double abs = 1e-14) {
  const double diff = std::abs(a - b);
  if (diff < abs) return true;
  return diff / std::max(std::abs(a), std::abs(b)) < rel;
}

bool sets_close(const CouplingSet& a, const CouplingSet& b) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (!mixed_close(a.omega(i, j), b.omega(i, j))) return false;
      if (!mixed_close(a.gamma(i, j), b.gamma(i, j))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("geometry validates and converts", "[coupling]") {
  CHECK_THROWS_AS(Geometry(0.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Geometry(-1.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Geometry(0.3, -0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Geometry(0.3, 4.0, 0.0), std::invalid_argument);

  const Geometry geom(0.5, 1.1, 0.7);
  CHECK(geom.eta() == Catch::Approx(2.0 * kPi * 0.5));
  const Eigen::Vector3d r = geom.cartesian();
  CHECK(r.x() == Catch::Approx(0.5 * std::sin(1.1) * std::cos(0.7)));
  CHECK(r.y() == Catch::Approx(0.5 * std::sin(1.1) * std::sin(0.7)));
  CHECK(r.z() == Catch::Approx(0.5 * std::cos(1.1)));

  const Geometry back = Geometry::from_cartesian(r);
  CHECK(back.separation() == Catch::Approx(0.5).epsilon(1e-14));
  CHECK(back.theta() == Catch::Approx(1.1).epsilon(1e-14));
  CHECK(back.phi() == Catch::Approx(0.7).epsilon(1e-14));

  // Negative azimuths wrap into [0, 2 pi).
  CHECK(Geometry(1.0, 0.5, -0.5).phi() == Catch::Approx(2.0 * kPi - 0.5));
}

TEST_CASE("chi tensor is axially symmetric along z", "[coupling]") {
  const ChiTensor chi = chi_tensor(Geometry(0.25, 0.0, 0.0));
  CHECK(chi.entries(0, 0) == chi.entries(1, 1));
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      if (k != l) CHECK(std::abs(chi.entries(k, l)) == 0.0);
    }
  }
}

TEST_CASE("chi tensor decays at large separation", "[coupling]") {
  for (double r : {1e2, 1e4, 1e6}) {
    const ChiTensor chi = chi_tensor(Geometry(r, 1.0, 2.0));
    const double eta = 2.0 * kPi * r;
    CHECK(chi.entries.cwiseAbs().maxCoeff() < 5.0 / eta);
  }
}

TEST_CASE("chi tensor matches the transcription table", "[coupling]") {
  // Frozen from an independent transcription of the tensor formula
  // evaluated at R = 0.3, theta = pi/2, phi = pi/2.
  const ChiTensor chi = chi_tensor(Geometry(0.3, kPi / 2.0, kPi / 2.0));
  const Complex xx(-0.57820673667741185, 0.4133613636086273);
  const Complex yy(0.66459765181309061, 0.68693073006405947);
  CHECK(std::abs(chi.entries(0, 0) - xx) < 1e-14);
  CHECK(std::abs(chi.entries(1, 1) - yy) < 1e-14);
  CHECK(std::abs(chi.entries(2, 2) - xx) < 1e-14);
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      if (k != l) CHECK(std::abs(chi.entries(k, l)) < 1e-14);
    }
  }
}

TEST_CASE("chi tensor is symmetric at random geometries", "[coupling]") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const ChiTensor chi = chi_tensor(rng.geometry());
    CHECK((chi.entries - chi.entries.transpose()).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("cross couplings vanish along the quantization axis", "[coupling]") {
  for (double r : {0.1, 0.3, 2.0}) {
    const CouplingSet c = coupling_from_tensor(Geometry(r, 0.0, 0.4));
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        CHECK(std::abs(c.omega(i, j)) < 1e-14);
        CHECK(std::abs(c.gamma(i, j)) < 1e-14);
      }
    }
  }
}

TEST_CASE("pi transition decouples in the equatorial plane", "[coupling]") {
  for (double phi : {0.0, 1.3, 5.0}) {
    const CouplingSet c = coupling_from_tensor(Geometry(0.7, kPi / 2.0, phi));
    CHECK(std::abs(c.omega(1, 0)) < 1e-14);  // Omega_21
    CHECK(std::abs(c.gamma(1, 0)) < 1e-14);
    CHECK(std::abs(c.omega(2, 1)) < 1e-14);  // Omega_32
    CHECK(std::abs(c.gamma(2, 1)) < 1e-14);
  }
}

TEST_CASE("collective decay saturates at small separation", "[coupling]") {
  const double r = 1e-3 / (2.0 * kPi);  // eta = 1e-3
  const CouplingSet c = coupling_from_tensor(Geometry(r, 0.7, 0.3));
  CHECK(std::abs(c.gamma(0, 0).real() - 1.0) < 1e-6);
  CHECK(std::abs(c.gamma(1, 1).real() - 1.0) < 1e-6);
}

TEST_CASE("closed form agrees with the tensor contraction", "[coupling]") {
  const Geometry geom(0.3, kPi / 3.0, 1.1);
  CHECK(sets_close(coupling_from_tensor(geom), coupling_closed_form(geom)));
}

TEST_CASE("route equivalence over random geometries", "[coupling]") {
  Rng rng(kDefaultSeed);
  for (int trial = 0; trial < 1000; ++trial) {
    const Geometry geom = rng.geometry();
    if (!sets_close(coupling_from_tensor(geom), coupling_closed_form(geom))) {
      CAPTURE(geom.separation(), geom.theta(), geom.phi());
      FAIL("routes disagree");
    }
  }
  SUCCEED();
}

TEST_CASE("closed form symmetry lines", "[coupling]") {
  const Geometry geom(0.42, 1.2, 2.2);
  const CouplingSet closed = coupling_closed_form(geom);
  // Exact by construction in the closed form.
  CHECK(closed.omega(2, 2) == closed.omega(0, 0));
  CHECK(closed.gamma(2, 2) == closed.gamma(0, 0));
  CHECK(closed.omega(2, 1) == -closed.omega(1, 0));
  CHECK(closed.gamma(2, 1) == -closed.gamma(1, 0));

  // To rounding in the contraction route.
  const CouplingSet tensor = coupling_from_tensor(geom);
  CHECK(std::abs(tensor.omega(2, 2) - tensor.omega(0, 0)) < 1e-14);
  CHECK(std::abs(tensor.omega(2, 1) + tensor.omega(1, 0)) < 1e-14);
  CHECK(std::abs(tensor.gamma(2, 1) + tensor.gamma(1, 0)) < 1e-14);
}

TEST_CASE("equatorial closed form drops the cotangent term", "[coupling]") {
  const double phi = 0.9;
  const CouplingSet c = coupling_closed_form(Geometry(0.3, kPi / 2.0, phi));
  const Complex expected =
      c.omega(0, 0) + c.omega(2, 0) * std::exp(Complex(0.0, 2.0 * phi));
  CHECK(std::abs(c.omega(1, 1) - expected) < 1e-14);
}

TEST_CASE("coupling matrices are Hermitian with real diagonals", "[coupling]") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const CouplingSet c = coupling_from_tensor(rng.geometry());
    CHECK((c.omega - c.omega.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((c.gamma - c.gamma.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(c.omega(i, i).imag()) < 1e-14);
      CHECK(std::abs(c.gamma(i, i).imag()) < 1e-14);
    }
  }
}

TEST_CASE("coupling magnitudes do not depend on the azimuth", "[coupling]") {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const double r = rng.uniform(0.05, 3.0);
    const double theta = std::acos(rng.uniform(-1.0, 1.0));
    const CouplingSet a = coupling_from_tensor(Geometry(r, theta, rng.uniform(0.0, 2.0 * kPi)));
    const CouplingSet b = coupling_from_tensor(Geometry(r, theta, rng.uniform(0.0, 2.0 * kPi)));
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        CHECK(std::abs(a.omega(i, j)) - std::abs(b.omega(i, j)) ==
              Catch::Approx(0.0).margin(1e-13));
        CHECK(std::abs(a.gamma(i, j)) - std::abs(b.gamma(i, j)) ==
              Catch::Approx(0.0).margin(1e-13));
      }
    }
  }
}

TEST_CASE("couplings vanish at infinite separation", "[coupling]") {
  const CouplingSet c = coupling_from_tensor(Geometry(1e6, 1.0, 0.5));
  CHECK(c.omega.cwiseAbs().maxCoeff() < 1e-5);
  CHECK(c.gamma.cwiseAbs().maxCoeff() < 1e-5);
}

TEST_CASE("cross-coupling helpers", "[coupling]") {
  const CouplingSet c = coupling_from_tensor(Geometry(0.3, 1.0, 0.2));
  const CouplingSet d = c.diagonal_only();
  CHECK(d.max_cross_coupling() == 0.0);
  CHECK(d.omega(0, 0) == c.omega(0, 0));
  CHECK(c.max_cross_coupling() > 0.0);
}
