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

#ifndef DDPAIR_EXPERIMENTS_HPP
#define DDPAIR_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ddpair/config.hpp"
#include "ddpair/random.hpp"

namespace ddpair {

inline constexpr const char* kVersion = "0.1.0";

// Environment variable consulted for the output directory when neither the
// config file nor the command line names one.
inline constexpr const char* kOutDirEnvVar = "DDPAIR_OUT";

struct RunContext {
  std::string out_dir = ".";
  std::uint64_t seed = kDefaultSeed;
};

struct ExperimentResult {
  bool passed = false;
  std::string summary;
  std::vector<std::string> output_files;  // CSV/plot paths, manifest last
};

// Names accepted by run_experiment.
const std::vector<std::string>& experiment_names();

// Dispatch one experiment. Every experiment writes its data as CSV
// (atomically, full double precision) plus a JSON manifest echoing the
// config, the seed, the library version, wall time and convergence
// diagnostics. `passed` reflects the experiment's own asserted tolerances.
// Unknown experiment names throw std::invalid_argument.
ExperimentResult run_experiment(const SimulationConfig& config,
                                const RunContext& context);

// Output directory resolution: the config file wins over the command line
// and the DDPAIR_OUT environment variable (with a warning to stderr on
// conflict); the command line wins over the environment.
std::string resolve_out_dir(const SimulationConfig& config,
                            const std::string& cli_out_dir);

}  // namespace ddpair

#endif  // DDPAIR_EXPERIMENTS_HPP
