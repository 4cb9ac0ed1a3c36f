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

#include "ddpair/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ddpair/dynamics.hpp"
#include "ddpair/fewlevel.hpp"
#include "ddpair/spectra.hpp"

namespace ddpair {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr double kPi = std::numbers::pi;

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

// Write-temp-then-rename so partial files never appear under the final name.
void write_file_atomic(const fs::path& path, const std::string& contents) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    }
    out << contents;
    if (!out.flush()) {
      throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
  }
  fs::rename(tmp, path);
}

class CsvBuilder {
 public:
  explicit CsvBuilder(const std::vector<std::string>& header) {
    for (std::size_t k = 0; k < header.size(); ++k) {
      if (k > 0) out_ << ',';
      out_ << header[k];
    }
    out_ << '\n';
    columns_ = header.size();
  }

  void row(const std::vector<double>& values) {
    if (values.size() != columns_) {
      throw std::logic_error("CSV row width does not match header");
    }
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (k > 0) out_ << ',';
      out_ << format_double(values[k]);
    }
    out_ << '\n';
  }

  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
  std::size_t columns_ = 0;
};

// Minimal line chart; the CSV is the contract, this is a convenience view.
std::string render_svg(const std::vector<double>& x,
                       const std::vector<std::pair<std::string, const std::vector<double>*>>& series,
                       const std::string& x_label) {
  constexpr int kWidth = 720, kHeight = 440, kMargin = 60;
  double y_min = 0.0, y_max = 1.0;
  for (const auto& [name, values] : series) {
    for (double v : *values) {
      y_min = std::min(y_min, v);
      y_max = std::max(y_max, v);
    }
  }
  if (y_max == y_min) y_max = y_min + 1.0;
  const double x_min = x.front(), x_max = x.back() == x.front() ? x.front() + 1.0 : x.back();
  const auto sx = [&](double v) {
    return kMargin + (v - x_min) / (x_max - x_min) * (kWidth - 2 * kMargin);
  };
  const auto sy = [&](double v) {
    return kHeight - kMargin - (v - y_min) / (y_max - y_min) * (kHeight - 2 * kMargin);
  };

  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin
      << "\" x2=\"" << kWidth - kMargin << "\" y2=\"" << kHeight - kMargin
      << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\""
      << kMargin << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n";
  int color = 0;
  for (const auto& [name, values] : series) {
    svg << "<polyline fill=\"none\" stroke=\"" << kColors[color % 4]
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < x.size(); ++k) {
      svg << sx(x[k]) << ',' << sy((*values)[k]) << ' ';
    }
    svg << "\"/>\n<text x=\"" << kWidth - kMargin + 5 << "\" y=\""
        << kMargin + 18 * color << "\" fill=\"" << kColors[color % 4]
        << "\" font-size=\"12\">" << name << "</text>\n";
    ++color;
  }
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 15
      << "\" font-size=\"13\" text-anchor=\"middle\">" << x_label << "</text>\n"
      << "<text x=\"12\" y=\"" << kMargin - 10 << "\" font-size=\"12\">"
      << format_double(y_max) << "</text>\n"
      << "<text x=\"12\" y=\"" << kHeight - kMargin << "\" font-size=\"12\">"
      << format_double(y_min) << "</text>\n</svg>\n";
  return svg.str();
}

json config_json(const SimulationConfig& config) {
  return json{
      {"geometry",
       {{"R", config.geometry.separation()},
        {"theta", config.geometry.theta()},
        {"phi", config.geometry.phi()}}},
      {"params",
       {{"delta", config.params.delta},
        {"omega_L", config.params.omega_L},
        {"detuning", config.params.detuning},
        {"laser_on", config.params.laser_on}}},
      {"run",
       {{"t_end", config.run.t_end},
        {"output_dt", config.run.output_dt},
        {"integrator_dt", config.run.integrator_dt}}}};
}

struct ExperimentIo {
  fs::path out_dir;
  std::string experiment;
  std::vector<std::string> files;

  fs::path emit(const std::string& filename, const std::string& contents) {
    const fs::path path = out_dir / filename;
    write_file_atomic(path, contents);
    files.push_back(path.string());
    return path;
  }
};

EvolveOptions options_from(const RunSettings& run) {
  EvolveOptions options;
  options.dt = run.integrator_dt;
  options.output_dt = run.output_dt;
  return options;
}

DensityMatrix ground_state() {
  return product_ket(4, 4) * product_ket(4, 4).adjoint();
}

// ----------------------------------------------------------------- couplings

ExperimentResult couplings_experiment(const SimulationConfig& config,
                                      const RunContext&, ExperimentIo& io) {
  const CouplingSet tensor = coupling_from_tensor(config.geometry);
  const CouplingSet closed = coupling_closed_form(config.geometry);

  double worst = 0.0;
  bool agree = true;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (const auto& [a, b] : {std::pair{tensor.omega(i, j), closed.omega(i, j)},
                                 std::pair{tensor.gamma(i, j), closed.gamma(i, j)}}) {
        const double diff = std::abs(a - b);
        const double scale = std::max(std::abs(a), std::abs(b));
        worst = std::max(worst, diff);
        if (diff >= 1e-14 && diff / scale >= 1e-12) agree = false;
      }
    }
  }

  CsvBuilder csv({"i", "j", "omega_re", "omega_im", "gamma_re", "gamma_im"});
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      csv.row({static_cast<double>(i), static_cast<double>(j),
               tensor.omega(i - 1, j - 1).real(), tensor.omega(i - 1, j - 1).imag(),
               tensor.gamma(i - 1, j - 1).real(), tensor.gamma(i - 1, j - 1).imag()});
    }
  }
  io.emit("couplings.csv", csv.str());

  std::ostringstream summary;
  summary << "tensor vs closed form max |diff| = " << worst;
  return {agree, summary.str(), {}};
}

// ------------------------------------------------------------------ spectrum

ExperimentResult spectrum_experiment(const SimulationConfig& config,
                                     const RunContext&, ExperimentIo& io) {
  const SpectrumReport dipole = spectrum_dipole(config.geometry);
  const SpectrumReport full =
      spectrum_full(config.geometry, config.params.delta);

  // +/- pairing of the dipole spectrum.
  double pairing = 0.0;
  for (int k = 0; k < kDim; ++k) {
    pairing = std::max(pairing, std::abs(dipole.eigenvalues[k] +
                                         dipole.eigenvalues[kDim - 1 - k]));
  }
  // Direct diagonalization against the 3x3 blocks plus ten zeros.
  std::vector<double> assembled(dipole.symmetric_block);
  assembled.insert(assembled.end(), dipole.antisymmetric_block.begin(),
                   dipole.antisymmetric_block.end());
  assembled.insert(assembled.end(), 10, 0.0);
  std::sort(assembled.begin(), assembled.end());
  const double block_residual = spectrum_distance(dipole.eigenvalues, assembled);

  CsvBuilder csv({"k", "lambda_dipole", "lambda_full"});
  for (int k = 0; k < kDim; ++k) {
    csv.row({static_cast<double>(k), dipole.eigenvalues[k], full.eigenvalues[k]});
  }
  io.emit("spectrum.csv", csv.str());

  const bool passed = pairing < 1e-12 && block_residual < 1e-12;
  std::ostringstream summary;
  summary << "pairing residual " << pairing << ", block residual "
          << block_residual;
  return {passed, summary.str(), {}};
}

// -------------------------------------------------------------- verify-theorem

ExperimentResult theorem_experiment(const SimulationConfig&,
                                    const RunContext& context,
                                    ExperimentIo& io) {
  Rng rng(context.seed);
  constexpr double kTol = 1e-10;
  bool passed = true;

  CsvBuilder hamiltonian_csv({"trial", "residual"});
  double worst_h = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const Geometry geom = rng.geometry();
    const Eigen::Vector3d axis = rng.unit_vector();
    const double angle = rng.uniform(0.0, 2.0 * kPi);
    const Geometry rotated = Geometry::from_cartesian(
        rotation_matrix(axis, angle) * geom.cartesian());
    const Matrix16c w = rotation_operator(axis, angle);
    const Matrix16c lhs = hamiltonian_dipole(coupling_from_tensor(rotated));
    const Matrix16c rhs =
        w * hamiltonian_dipole(coupling_from_tensor(geom)) * w.adjoint();
    const double residual = (lhs - rhs).cwiseAbs().maxCoeff();
    hamiltonian_csv.row({static_cast<double>(trial), residual});
    worst_h = std::max(worst_h, residual);
    passed = passed && residual < kTol;
  }
  io.emit("theorem_hamiltonian.csv", hamiltonian_csv.str());

  CsvBuilder dissipator_csv({"trial", "max_residual"});
  double worst_d = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Geometry geom = rng.geometry();
    const Eigen::Vector3d axis = rng.unit_vector();
    const double angle = rng.uniform(0.0, 2.0 * kPi);
    const Geometry rotated = Geometry::from_cartesian(
        rotation_matrix(axis, angle) * geom.cartesian());
    const Matrix16c w = rotation_operator(axis, angle);
    const Dissipator at_geom(coupling_from_tensor(geom));
    const Dissipator at_rotated(coupling_from_tensor(rotated));
    double residual = 0.0;
    for (int s = 0; s < 20; ++s) {
      const Matrix16c rho = rng.hermitian_state();
      const Matrix16c lhs = at_rotated.apply(rho);
      const Matrix16c rhs =
          w * at_geom.apply(w.adjoint() * rho * w) * w.adjoint();
      residual = std::max(residual, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    dissipator_csv.row({static_cast<double>(trial), residual});
    worst_d = std::max(worst_d, residual);
    passed = passed && residual < kTol;
  }
  io.emit("theorem_dissipator.csv", dissipator_csv.str());

  std::ostringstream summary;
  summary << "max Hamiltonian residual " << worst_h
          << ", max dissipator residual " << worst_d << " (tolerance " << kTol
          << ")";
  return {passed, summary.str(), {}};
}

// ------------------------------------------------------------------- leakage

ExperimentResult leakage_experiment(const SimulationConfig& config,
                                    const RunContext&, ExperimentIo& io,
                                    json* diagnostics) {
  const Trajectory traj = evolve(ground_state(), config.params, config.geometry,
                                 config.run.t_end, options_from(config.run));

  CsvBuilder csv({"t", "P_S", "P_V", "P_rest", "trace_err", "min_eig"});
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    csv.row({traj.times[k], traj.series("P_S")[k], traj.series("P_V")[k],
             traj.series("P_rest")[k], traj.series("trace_err")[k],
             traj.series("min_eig")[k]});
  }
  io.emit("leakage.csv", csv.str());
  io.emit("leakage.svg",
          render_svg(traj.times,
                     {{"P_S", &traj.series("P_S")}, {"P_V", &traj.series("P_V")},
                      {"P_rest", &traj.series("P_rest")}},
                     "t [1/gamma]"));

  (*diagnostics)["max_trace_error"] = traj.max_trace_error;
  (*diagnostics)["min_eigenvalue"] = traj.min_eigenvalue;
  (*diagnostics)["convergence_delta"] = traj.convergence_delta;
  (*diagnostics)["dt_used"] = traj.dt_used;

  const bool passed = traj.max_trace_error < kTraceTol &&
                      traj.min_eigenvalue > -kPositivityTol;
  std::ostringstream summary;
  summary << "final P_S = " << traj.series("P_S").back()
          << ", max trace error " << traj.max_trace_error;
  return {passed, summary.str(), {}};
}

// --------------------------------------------------------------- equivalence

ExperimentResult equivalence_experiment(const SimulationConfig& config,
                                        const RunContext& context,
                                        ExperimentIo& io) {
  Rng rng(context.seed);
  // With a Zeeman-split multiplet only z rotations are a symmetry.
  const Eigen::Vector3d axis = config.params.delta == 0.0
                                   ? rng.unit_vector()
                                   : Eigen::Vector3d(0.0, 0.0, 1.0);
  const double angle = rng.uniform(0.0, 2.0 * kPi);

  SystemParams params = config.params;
  params.laser_on = false;
  params.omega_L = 0.0;

  const CollectiveBasis& basis = CollectiveBasis::standard();
  const DensityMatrix rho0 = basis.s_states[2] * basis.s_states[2].adjoint();
  const double deviation = verify_evolution_equivalence(
      config.geometry, axis, angle, params, rho0, config.run.t_end,
      options_from(config.run));

  CsvBuilder csv({"axis_x", "axis_y", "axis_z", "angle", "max_deviation"});
  csv.row({axis.x(), axis.y(), axis.z(), angle, deviation});
  io.emit("equivalence.csv", csv.str());

  constexpr double kTol = 1e-8;
  std::ostringstream summary;
  summary << "max entrywise deviation " << deviation << " (tolerance " << kTol
          << ")";
  return {deviation < kTol, summary.str(), {}};
}

// ----------------------------------------------------------------- breakdown

ExperimentResult breakdown_experiment(const SimulationConfig& config,
                                      const RunContext&, ExperimentIo& io) {
  std::vector<double> thetas;
  constexpr int kPoints = 33;
  for (int k = 0; k < kPoints; ++k) {
    thetas.push_back(0.5 * kPi * k / (kPoints - 1));
  }
  const TruncationScheme scheme = TruncationScheme::single(2);
  const BreakdownReport report =
      breakdown_report(scheme, config.geometry.separation(), thetas);

  std::vector<std::string> header{"theta"};
  for (int k = 0; k < kDim; ++k) header.push_back("full_" + std::to_string(k));
  const int reduced_dim = static_cast<int>(report.truncated_spectra.front().size());
  for (int k = 0; k < reduced_dim; ++k) header.push_back("trunc_" + std::to_string(k));
  header.push_back("splitting_2abs_omega22");

  CsvBuilder csv(header);
  for (std::size_t r = 0; r < report.thetas.size(); ++r) {
    std::vector<double> row{report.thetas[r]};
    row.insert(row.end(), report.full_spectra[r].begin(), report.full_spectra[r].end());
    row.insert(row.end(), report.truncated_spectra[r].begin(),
               report.truncated_spectra[r].end());
    row.push_back(report.splittings[r]);
    csv.row(row);
  }
  io.emit("breakdown.csv", csv.str());

  const bool passed = report.full_variation < 1e-10;
  std::ostringstream summary;
  summary << "full spectrum variation " << report.full_variation
          << ", scheme " << scheme.name << " variation "
          << report.truncated_variation;
  return {passed, summary.str(), {}};
}

// ---------------------------------------------------------------- decoupling

ExperimentResult decoupling_experiment(const SimulationConfig& config,
                                       const RunContext&, ExperimentIo& io) {
  const std::vector<double> multipliers{0.0, 10.0, 100.0, 1000.0};
  EvolveOptions options = options_from(config.run);
  options.check_convergence = false;  // eight runs; dt comes from the config
  const DecouplingReport report = large_delta_decoupling_check(
      config.geometry, config.params, multipliers, config.run.t_end, options);

  CsvBuilder csv({"multiplier", "delta", "max_deviation"});
  for (const auto& entry : report.entries) {
    csv.row({entry.multiplier, entry.delta, entry.max_deviation});
  }
  io.emit("decoupling.csv", csv.str());

  const bool passed =
      report.monotone_decreasing && report.entries.back().max_deviation < 1e-2;
  std::ostringstream summary;
  summary << "max cross coupling " << report.max_cross_coupling
          << ", deviation at x1000: " << report.entries.back().max_deviation
          << (report.monotone_decreasing ? " (monotone)" : " (NOT monotone)");
  return {passed, summary.str(), {}};
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{
      "couplings",  "spectrum",  "verify-theorem", "leakage",
      "equivalence", "breakdown", "decoupling"};
  return names;
}

std::string resolve_out_dir(const SimulationConfig& config,
                            const std::string& cli_out_dir) {
  const char* env = std::getenv(kOutDirEnvVar);
  const std::string env_dir = env != nullptr ? env : "";
  if (!config.out_dir.empty()) {
    if ((!cli_out_dir.empty() && cli_out_dir != config.out_dir) ||
        (!env_dir.empty() && env_dir != config.out_dir)) {
      std::cerr << "warning: config file out_dir '" << config.out_dir
                << "' overrides the command line/environment value\n";
    }
    return config.out_dir;
  }
  if (!cli_out_dir.empty()) return cli_out_dir;
  if (!env_dir.empty()) return env_dir;
  return ".";
}

ExperimentResult run_experiment(const SimulationConfig& config,
                                const RunContext& context) {
  const auto& names = experiment_names();
  if (std::find(names.begin(), names.end(), config.experiment) == names.end()) {
    std::ostringstream msg;
    msg << "unknown experiment '" << config.experiment << "'; expected one of:";
    for (const auto& name : names) msg << ' ' << name;
    throw std::invalid_argument(msg.str());
  }

  ExperimentIo io;
  io.out_dir = context.out_dir.empty() ? "." : context.out_dir;
  io.experiment = config.experiment;
  fs::create_directories(io.out_dir);

  json diagnostics = json::object();
  const auto start = std::chrono::steady_clock::now();

  ExperimentResult result;
  if (config.experiment == "couplings") {
    result = couplings_experiment(config, context, io);
  } else if (config.experiment == "spectrum") {
    result = spectrum_experiment(config, context, io);
  } else if (config.experiment == "verify-theorem") {
    result = theorem_experiment(config, context, io);
  } else if (config.experiment == "leakage") {
    result = leakage_experiment(config, context, io, &diagnostics);
  } else if (config.experiment == "equivalence") {
    result = equivalence_experiment(config, context, io);
  } else if (config.experiment == "breakdown") {
    result = breakdown_experiment(config, context, io);
  } else {
    result = decoupling_experiment(config, context, io);
  }

  const double wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  json manifest{{"experiment", config.experiment},
                {"library_version", kVersion},
                {"seed", context.seed},
                {"wall_time_seconds", wall_seconds},
                {"passed", result.passed},
                {"summary", result.summary},
                {"config", config_json(config)},
                {"outputs", io.files}};
  if (!diagnostics.empty()) manifest["diagnostics"] = diagnostics;
  io.emit(config.experiment + "_manifest.json", manifest.dump(2) + "\n");

  result.output_files = io.files;
  return result;
}

}  // namespace ddpair
