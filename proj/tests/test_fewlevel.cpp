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
#include <numbers>

#include <catch2/catch_amalgamated.hpp>

#include "ddpair/fewlevel.hpp"
#include "ddpair/random.hpp"
#include "ddpair/spectra.hpp"

using namespace ddpair;

namespace {

constexpr double kPi = std::numbers::pi;

SystemParams curve1_params() {
  SystemParams params;
  params.omega_L = 2.0;
  params.detuning = 0.58;
  params.laser_on = true;
  return params;
}

EvolveOptions fast_options() {
  EvolveOptions options;
  options.check_convergence = false;
  return options;
}

DensityMatrix ground_state() {
  return product_ket(4, 4) * product_ket(4, 4).adjoint();
}

}  // namespace

TEST_CASE("truncation schemes validate their level sets", "[fewlevel]") {
  CHECK_THROWS_AS(TruncationScheme({}, "empty"), std::invalid_argument);
  CHECK_THROWS_AS(TruncationScheme({0}, "bad"), std::invalid_argument);
  CHECK_THROWS_AS(TruncationScheme({4}, "ground"), std::invalid_argument);

  const TruncationScheme two = TruncationScheme::single(2);
  CHECK(two.kept_product_indices() ==
        std::vector<int>{product_index(2, 2), product_index(2, 4),
                         product_index(4, 2), product_index(4, 4)});
  CHECK(TruncationScheme::full().kept_product_indices().size() == 16);
  CHECK(TruncationScheme::v_system().kept_product_indices().size() == 9);
}

TEST_CASE("two-level splitting closed form", "[fewlevel]") {
  CHECK_THROWS_AS(two_level_splitting(0.0, 1.0), std::invalid_argument);

  SECTION("equatorial value reduces to the first radial function") {
    const double r = 0.37;
    const double eta = 2.0 * kPi * r;
    const double f1 = (1.0 / eta - 1.0 / (eta * eta * eta)) * std::cos(eta) -
                      std::sin(eta) / (eta * eta);
    CHECK(two_level_splitting(r, kPi / 2.0) == Catch::Approx(3.0 * std::abs(f1)));
  }

  SECTION("matches the canonical pi-pi coupling magnitude") {
    Rng rng(47);
    for (int trial = 0; trial < 100; ++trial) {
      const double r = rng.uniform(0.05, 3.0);
      const double theta = std::acos(rng.uniform(-1.0, 1.0));
      const CouplingSet c = coupling_from_tensor(Geometry(r, theta, 1.7));
      const double expected = 2.0 * std::abs(c.omega(1, 1));
      CHECK(two_level_splitting(r, theta) ==
            Catch::Approx(expected).epsilon(1e-12).margin(1e-13));
    }
  }

  SECTION("spurious orientation dependence at moderate separation") {
    const double pole = two_level_splitting(0.2, 0.0);
    const double equator = two_level_splitting(0.2, kPi / 2.0);
    CHECK(std::abs(pole - equator) / std::max(pole, equator) > 0.1);
  }
}

TEST_CASE("truncated model structure", "[fewlevel]") {
  const Geometry geom(0.3, 0.9, 1.2);
  SystemParams degenerate;

  SECTION("pi-only scheme keeps the expected block and eigenvalues") {
    const TruncatedModel model(TruncationScheme::single(2), geom, degenerate);
    REQUIRE(model.dim() == 4);
    const CouplingSet c = coupling_from_tensor(geom);
    const std::vector<double> spectrum = model.dipole_spectrum();
    CHECK(spectrum.front() == Catch::Approx(-std::abs(c.omega(1, 1))).margin(1e-13));
    CHECK(spectrum.back() == Catch::Approx(std::abs(c.omega(1, 1))).margin(1e-13));
    CHECK(std::abs(spectrum[1]) < 1e-13);
    CHECK(std::abs(spectrum[2]) < 1e-13);
  }

  SECTION("identity truncation reproduces the generator bit for bit") {
    SystemParams params = curve1_params();
    params.delta = 0.4;
    const TruncatedModel identity(TruncationScheme::full(), geom, params);
    const CouplingSet c = coupling_from_tensor(geom);
    const Generator full(params, c);
    Rng rng(53);
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix16c rho = rng.hermitian_state();
      const Eigen::MatrixXcd reduced = identity.apply(rho);
      const Matrix16c direct = full(rho);
      for (int r = 0; r < kDim; ++r) {
        for (int col = 0; col < kDim; ++col) {
          CHECK(reduced(r, col) == direct(r, col));
        }
      }
    }
  }

  SECTION("embedding round trip and dimension checks") {
    const TruncatedModel model(TruncationScheme::v_system(), geom, degenerate);
    Eigen::MatrixXcd reduced = Eigen::MatrixXcd::Identity(9, 9) / 9.0;
    CHECK((model.restricted(model.embedded(reduced)) - reduced).norm() == 0.0);
    CHECK_THROWS_AS(model.embedded(Eigen::MatrixXcd::Identity(4, 4)),
                    std::invalid_argument);
  }
}

TEST_CASE("valid-geometry truncations track the full dynamics", "[fewlevel]") {
  const SystemParams drive = curve1_params();
  const EvolveOptions options = fast_options();
  const double t_end = 5.0;

  const auto compare = [&](const TruncationScheme& scheme, const Geometry& geom) {
    const TruncatedModel model(scheme, geom, drive);
    const Trajectory full = evolve(ground_state(), drive, geom, t_end, options);
    const ReducedTrajectory reduced =
        model.evolve(model.restricted(ground_state()), t_end, options);
    double deviation = 0.0;
    for (std::size_t k = 0; k < full.states.size(); ++k) {
      deviation = std::max(deviation,
                           (model.restricted(full.states[k]) - reduced.states[k])
                               .cwiseAbs()
                               .maxCoeff());
    }
    return deviation;
  };

  SECTION("sigma+ two-level atom along the quantization axis") {
    CHECK(compare(TruncationScheme::single(3), Geometry(0.3, 0.0, 0.0)) < 1e-8);
  }

  SECTION("V system in the equatorial plane") {
    CHECK(compare(TruncationScheme::v_system(),
                  Geometry(0.3, kPi / 2.0, kPi / 2.0)) < 1e-8);
  }

  SECTION("tilted two-level truncation leaks") {
    const Geometry tilted(0.3, kPi / 4.0, kPi / 2.0);
    const Trajectory full = evolve(ground_state(), drive, tilted, 25.0, options);
    const TruncationScheme scheme = TruncationScheme::single(3);
    Subspace kept("scheme3", scheme.kept_product_indices());
    double outside = 0.0;
    for (const auto& rho : full.states) {
      outside = std::max(outside, 1.0 - subspace_population(rho, kept));
    }
    CHECK(outside > 1e-3);
  }
}

TEST_CASE("breakdown report quantifies the spurious dependence", "[fewlevel]") {
  const std::vector<double> thetas{0.0, kPi / 4.0, kPi / 2.0};

  SECTION("the pi-only truncation varies where the full model does not") {
    const BreakdownReport report =
        breakdown_report(TruncationScheme::single(2), 0.2, thetas);
    CHECK(report.full_variation < 1e-10);
    CHECK(report.truncated_variation > 0.1);
    CHECK(report.splittings.front() != Catch::Approx(report.splittings.back()));
  }

  SECTION("identity truncation has no variation at all") {
    const BreakdownReport report =
        breakdown_report(TruncationScheme::full(), 0.2, thetas);
    CHECK(report.full_variation < 1e-10);
    CHECK(report.truncated_variation < 1e-10);
  }

  SECTION("z-aligned two-level spectrum embeds in the full one") {
    const std::vector<double> pole{0.0};
    const BreakdownReport report =
        breakdown_report(TruncationScheme::single(3), 0.2, pole);
    for (double value : report.truncated_spectra.front()) {
      double best = 1e9;
      for (double full_value : report.full_spectra.front()) {
        best = std::min(best, std::abs(full_value - value));
      }
      CHECK(best < 1e-12);
    }
  }
}

TEST_CASE("cross couplings decouple at large Zeeman splitting", "[fewlevel]") {
  EvolveOptions options = fast_options();
  const SystemParams drive = curve1_params();

  SECTION("deviation falls monotonically through the multiplier ladder") {
    const std::vector<double> multipliers{0.0, 10.0, 100.0, 1000.0};
    const DecouplingReport report = large_delta_decoupling_check(
        Geometry(0.3, kPi / 2.0, kPi / 2.0), drive, multipliers, 10.0, options);
    CHECK(report.max_cross_coupling > 0.5);
    CHECK(report.entries.front().max_deviation > 1e-2);  // cross terms matter
    CHECK(report.monotone_decreasing);
    CHECK(report.entries.back().max_deviation < 1e-2);
  }

  SECTION("nothing to decouple along the quantization axis") {
    const std::vector<double> multipliers{0.0, 1000.0};
    const DecouplingReport report = large_delta_decoupling_check(
        Geometry(0.3, 0.0, 0.0), drive, multipliers, 5.0, options);
    CHECK(report.max_cross_coupling < 1e-14);
    for (const auto& entry : report.entries) {
      CHECK(entry.max_deviation < 1e-10);
    }
  }
}
