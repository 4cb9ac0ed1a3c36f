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

#include "ddpair/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace ddpair {

namespace {

struct RawEntry {
  std::string value;
  int line = 0;
};

using Section = std::map<std::string, RawEntry>;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(const std::string& text, double* out) {
  if (text.empty()) return false;
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) return false;
  *out = value;
  return true;
}

class Validator {
 public:
  Validator(const std::map<std::string, Section>& sections,
            std::vector<std::string>* errors)
      : sections_(sections), errors_(errors) {}

  // Returns the raw string for section.key, or nullptr if absent.
  const RawEntry* find(const std::string& section, const std::string& key) {
    const auto sec = sections_.find(section);
    if (sec == sections_.end()) return nullptr;
    const auto entry = sec->second.find(key);
    if (entry == sec->second.end()) return nullptr;
    used_.insert(section + "." + key);
    return &entry->second;
  }

  bool number(const std::string& section, const std::string& key,
              bool required, double* out) {
    const RawEntry* entry = find(section, key);
    if (entry == nullptr) {
      if (required) {
        errors_->push_back(section + "." + key + ": required key is missing");
      }
      return false;
    }
    double value = 0.0;
    if (!parse_double(entry->value, &value) || !std::isfinite(value)) {
      errors_->push_back(section + "." + key + ": not a finite number (got '" +
                         entry->value + "')");
      return false;
    }
    *out = value;
    return true;
  }

  bool boolean(const std::string& section, const std::string& key, bool* out) {
    const RawEntry* entry = find(section, key);
    if (entry == nullptr) return false;
    if (entry->value == "true") {
      *out = true;
    } else if (entry->value == "false") {
      *out = false;
    } else {
      errors_->push_back(section + "." + key + ": expected true or false (got '" +
                         entry->value + "')");
      return false;
    }
    return true;
  }

  bool text(const std::string& section, const std::string& key,
            std::string* out) {
    const RawEntry* entry = find(section, key);
    if (entry == nullptr) return false;
    *out = entry->value;
    return true;
  }

  // Everything present but never requested is an unknown key.
  void flag_unknown_keys() {
    for (const auto& [section, entries] : sections_) {
      for (const auto& [key, entry] : entries) {
        const std::string path = section + "." + key;
        if (used_.find(path) == used_.end()) {
          errors_->push_back(path + ": unknown key (line " +
                             std::to_string(entry.line) + ")");
        }
      }
    }
  }

 private:
  const std::map<std::string, Section>& sections_;
  std::vector<std::string>* errors_;
  std::set<std::string> used_;
};

}  // namespace

ParseResult parse_config(std::string_view text) {
  ParseResult result;
  auto& errors = result.errors;

  std::map<std::string, Section> sections;
  std::string current;
  int line_number = 0;
  std::istringstream stream{std::string(text)};
  std::string raw_line;
  while (std::getline(stream, raw_line)) {
    ++line_number;
    std::string_view line = trim(raw_line);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;

    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        errors.push_back("line " + std::to_string(line_number) +
                         ": malformed section header '" + std::string(line) + "'");
        current.clear();
        continue;
      }
      current = std::string(trim(line.substr(1, line.size() - 2)));
      if (current != "geometry" && current != "params" && current != "run") {
        errors.push_back("line " + std::to_string(line_number) +
                         ": unknown section [" + current + "]");
        current.clear();
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      errors.push_back("line " + std::to_string(line_number) +
                       ": expected key = value, got '" + std::string(line) + "'");
      continue;
    }
    const std::string key{trim(line.substr(0, eq))};
    const std::string value{trim(line.substr(eq + 1))};
    if (current.empty()) {
      errors.push_back("line " + std::to_string(line_number) + ": key '" + key +
                       "' outside of a [geometry]/[params]/[run] section");
      continue;
    }
    if (key.empty()) {
      errors.push_back("line " + std::to_string(line_number) + ": empty key");
      continue;
    }
    auto [it, inserted] = sections[current].insert({key, {value, line_number}});
    if (!inserted) {
      errors.push_back(current + "." + key + ": duplicate key (line " +
                       std::to_string(line_number) + ", first set on line " +
                       std::to_string(it->second.line) + ")");
    }
  }

  Validator v(sections, &errors);

  double separation = 0.0, theta = 0.0, phi = 0.0;
  const bool has_r = v.number("geometry", "R", true, &separation);
  const bool has_theta = v.number("geometry", "theta", true, &theta);
  v.number("geometry", "phi", true, &phi);
  if (has_r && separation <= 0.0) {
    errors.push_back("geometry.R: must be > 0 (got " + std::to_string(separation) + ")");
  }
  if (has_theta && (theta < 0.0 || theta > std::numbers::pi)) {
    errors.push_back("geometry.theta: must lie in [0, pi] radians");
  }

  SimulationConfig config;
  v.number("params", "delta", false, &config.params.delta);
  const bool has_omega = v.number("params", "omega_L", false, &config.params.omega_L);
  v.number("params", "detuning", false, &config.params.detuning);
  if (has_omega && config.params.omega_L < 0.0) {
    errors.push_back("params.omega_L: must be >= 0");
  }
  config.params.laser_on = config.params.omega_L != 0.0;
  v.boolean("params", "laser_on", &config.params.laser_on);

  v.number("run", "t_end", false, &config.run.t_end);
  v.number("run", "output_dt", false, &config.run.output_dt);
  v.number("run", "integrator_dt", false, &config.run.integrator_dt);
  v.text("run", "experiment", &config.experiment);
  v.text("run", "out_dir", &config.out_dir);
  if (config.run.t_end <= 0.0) {
    errors.push_back("run.t_end: must be > 0");
  }
  if (config.run.output_dt <= 0.0 || config.run.output_dt > config.run.t_end) {
    errors.push_back("run.output_dt: must lie in (0, t_end]");
  }
  if (config.run.integrator_dt <= 0.0) {
    errors.push_back("run.integrator_dt: must be > 0");
  }

  v.flag_unknown_keys();

  if (!errors.empty()) return result;

  config.geometry = Geometry(separation, theta, phi);
  result.config = config;
  return result;
}

ParseResult load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    ParseResult result;
    result.errors.push_back("cannot read config file '" + path + "'");
    return result;
  }
  std::ostringstream contents;
  contents << in.rdbuf();
  return parse_config(contents.str());
}

}  // namespace ddpair
