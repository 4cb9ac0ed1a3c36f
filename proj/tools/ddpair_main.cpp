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

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ddpair/config.hpp"
#include "ddpair/experiments.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Two dipole-dipole coupled four-level atoms: couplings, spectra, "
      "master-equation dynamics and few-level truncation experiments"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = ddpair::kDefaultSeed;

  for (const auto& name : ddpair::experiment_names()) {
    CLI::App* sub = app.add_subcommand(name, "run the '" + name + "' experiment");
    sub->add_option("--config", config_path, "config file (INI, angles in radians)")
        ->required();
    sub->add_option("--seed", seed, "seed for randomized verification runs");
    sub->add_option("--out", out_dir, "output directory");
  }

  CLI11_PARSE(app, argc, argv);

  const std::string experiment = app.get_subcommands().front()->get_name();

  ddpair::ParseResult parsed = ddpair::load_config(config_path);
  if (!parsed.ok()) {
    std::cerr << "config error(s) in '" << config_path << "':\n";
    for (const auto& error : parsed.errors) {
      std::cerr << "  " << error << '\n';
    }
    return 2;
  }

  ddpair::SimulationConfig config = *parsed.config;
  config.experiment = experiment;

  ddpair::RunContext context;
  context.out_dir = ddpair::resolve_out_dir(config, out_dir);
  context.seed = seed;

  try {
    const ddpair::ExperimentResult result =
        ddpair::run_experiment(config, context);
    std::cout << experiment << ": " << (result.passed ? "PASS" : "FAIL")
              << " -- " << result.summary << '\n';
    for (const auto& file : result.output_files) {
      std::cout << "  wrote " << file << '\n';
    }
    return result.passed ? 0 : 1;
  } catch (const std::exception& error) {
    std::cerr << experiment << ": error: " << error.what() << '\n';
    return 3;
  }
}
