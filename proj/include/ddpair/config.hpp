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

#ifndef DDPAIR_CONFIG_HPP
#define DDPAIR_CONFIG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ddpair/geometry.hpp"
#include "ddpair/operators.hpp"

namespace ddpair {

struct RunSettings {
  double t_end = 25.0;
  double output_dt = 0.05;
  double integrator_dt = 1e-3;
};

struct SimulationConfig {
  Geometry geometry{0.3, 0.0, 0.0};
  SystemParams params;
  RunSettings run;
  std::string experiment;  // may also come from the command line
  std::string out_dir;     // optional override of the output directory
};

// Outcome of strict config parsing: either a validated config or the full
// list of problems, one message per offending key path.
struct ParseResult {
  std::optional<SimulationConfig> config;
  std::vector<std::string> errors;

  bool ok() const { return config.has_value() && errors.empty(); }
};

// Parse flat INI-style text with sections [geometry], [params], [run].
// Angles are radians. Unknown sections or keys, duplicate keys, malformed
// values, missing required keys and out-of-range values are all collected
// (not just the first). Recognized keys:
//   geometry: R, theta, phi            (required)
//   params:   delta, omega_L, detuning, laser_on
//   run:      t_end, output_dt, integrator_dt, experiment, out_dir
// laser_on defaults to true exactly when omega_L is nonzero.
ParseResult parse_config(std::string_view text);

// parse_config on the contents of a file; a read failure is reported as a
// parse error.
ParseResult load_config(const std::string& path);

}  // namespace ddpair

#endif  // DDPAIR_CONFIG_HPP
