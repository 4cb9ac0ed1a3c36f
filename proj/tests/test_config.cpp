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

#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "ddpair/config.hpp"

using namespace ddpair;

namespace {

bool has_error_mentioning(const ParseResult& result, const std::string& needle) {
  for (const auto& error : result.errors) {
    if (error.find(needle) != std::string::npos) return true;
  }
  return false;
}

constexpr const char* kMinimal = R"(
[geometry]
R = 0.3
theta = 1.5707963
phi = 1.5707963

[params]
delta = 0
omega_L = 2
detuning = 0.58
)";

}  // namespace

TEST_CASE("minimal config describes the driven equatorial pair", "[config]") {
  const ParseResult result = parse_config(kMinimal);
  REQUIRE(result.ok());
  const SimulationConfig& config = *result.config;
  CHECK(config.geometry.separation() == Catch::Approx(0.3));
  CHECK(config.geometry.theta() == Catch::Approx(1.5707963));
  CHECK(config.geometry.phi() == Catch::Approx(1.5707963));
  CHECK(config.params.delta == 0.0);
  CHECK(config.params.omega_L == 2.0);
  CHECK(config.params.detuning == Catch::Approx(0.58));
  CHECK(config.params.laser_on);  // inferred from omega_L != 0
  CHECK(config.run.t_end == 25.0);
  CHECK(config.run.output_dt == 0.05);
  CHECK(config.run.integrator_dt == 1e-3);
}

TEST_CASE("laser flag can be forced off", "[config]") {
  const std::string text = std::string(kMinimal) + "laser_on = false\n";
  const ParseResult result = parse_config(text);
  REQUIRE(result.ok());
  CHECK_FALSE(result.config->params.laser_on);
}

TEST_CASE("negative separation names the key path", "[config]") {
  const ParseResult result = parse_config(R"(
[geometry]
R = -1
theta = 0
phi = 0
)");
  CHECK_FALSE(result.ok());
  CHECK(has_error_mentioning(result, "geometry.R"));
}

TEST_CASE("duplicate keys are rejected", "[config]") {
  const ParseResult result = parse_config(R"(
[geometry]
R = 0.3
R = 0.4
theta = 0
phi = 0
)");
  CHECK_FALSE(result.ok());
  CHECK(has_error_mentioning(result, "duplicate"));
  CHECK(has_error_mentioning(result, "geometry.R"));
}

TEST_CASE("unknown keys and sections are rejected", "[config]") {
  const ParseResult result = parse_config(R"(
[geometry]
R = 0.3
theta = 0
phi = 0
radius = 7

[lasers]
power = 9
)");
  CHECK_FALSE(result.ok());
  CHECK(has_error_mentioning(result, "geometry.radius"));
  CHECK(has_error_mentioning(result, "[lasers]"));
}

TEST_CASE("all problems are collected, not just the first", "[config]") {
  const ParseResult result = parse_config(R"(
[geometry]
R = not_a_number
theta = 9.9

[params]
omega_L = -2
laser_on = maybe

[run]
t_end = -5
)");
  CHECK_FALSE(result.ok());
  CHECK(has_error_mentioning(result, "geometry.R"));
  CHECK(has_error_mentioning(result, "geometry.theta"));
  CHECK(has_error_mentioning(result, "geometry.phi"));  // missing
  CHECK(has_error_mentioning(result, "params.omega_L"));
  CHECK(has_error_mentioning(result, "params.laser_on"));
  CHECK(has_error_mentioning(result, "run.t_end"));
  CHECK(result.errors.size() >= 6);
}

TEST_CASE("keys outside any section are flagged", "[config]") {
  const ParseResult result = parse_config("R = 0.3\n");
  CHECK_FALSE(result.ok());
  CHECK(has_error_mentioning(result, "outside"));
}

TEST_CASE("run section controls the integrator", "[config]") {
  const std::string text = std::string(kMinimal) + R"(
[run]
t_end = 5
output_dt = 0.1
integrator_dt = 0.0005
experiment = leakage
out_dir = /tmp/ddpair-test
)";
  const ParseResult result = parse_config(text);
  REQUIRE(result.ok());
  CHECK(result.config->run.t_end == 5.0);
  CHECK(result.config->run.output_dt == 0.1);
  CHECK(result.config->run.integrator_dt == 0.0005);
  CHECK(result.config->experiment == "leakage");
  CHECK(result.config->out_dir == "/tmp/ddpair-test");
}

TEST_CASE("output grid must fit the horizon", "[config]") {
  const std::string text = std::string(kMinimal) + R"(
[run]
t_end = 1
output_dt = 2
)";
  const ParseResult result = parse_config(text);
  CHECK_FALSE(result.ok());
  CHECK(has_error_mentioning(result, "run.output_dt"));
}

TEST_CASE("missing file reports a readable error", "[config]") {
  const ParseResult result = load_config("/nonexistent/ddpair.ini");
  CHECK_FALSE(result.ok());
  CHECK(has_error_mentioning(result, "cannot read"));
}
