// Copyright 2026 The iprqs Authors
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace iprqs {

enum class Mode { exact, sampled };

std::string to_string(Mode mode);

/// Every experiment reads the fields it needs and ignores the rest.
struct ExperimentConfig {
  std::string experiment;  // oat_sweep | pxp_sweep | aklt_sweep | m_convergence | bound_study
  std::string model = "pxp";  // m_convergence: pxp | aklt | oat
  std::size_t sites = 4;
  int q = 2;
  unsigned d = 2;
  std::vector<double> h_grid;
  std::vector<double> t_grid;
  std::vector<int> m_list;
  double h = 0.5;
  /// Evolution time; 0 means pi / spread where the experiment allows it.
  double t = 1.0;
  int n_trotter = 10;
  bool periodic = true;
  bool exact_evolution = false;
  Mode mode = Mode::exact;
  std::optional<std::int64_t> n_shots;
  std::optional<std::uint64_t> seed;
  int ensemble = 500;
  std::size_t ensemble_qubits = 4;
  std::vector<int> trotter_steps;
  std::string output = "results";
  bool timing = false;
};

inline const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"oat_sweep", "pxp_sweep", "aklt_sweep", "m_convergence",
                                              "bound_study"};
  return names;
}

/// Built-in defaults for `experiment`. Throws Errc::config for unknown names.
ExperimentConfig default_config(const std::string& experiment);

/// Parses YAML text. Keys override the defaults of the named experiment; a
/// non-empty `experiment_override` replaces the file's `experiment` key.
ExperimentConfig parse_config(const std::string& yaml_text, const std::string& experiment_override = "");

/// Throws Errc::io when the file cannot be read and Errc::config on bad content.
ExperimentConfig load_config(const std::filesystem::path& path, const std::string& experiment_override = "");

/// Throws Errc::config naming the first offending field.
void validate(const ExperimentConfig& config);

/// Stable YAML rendering: fixed key order, 17 significant digits.
std::string canonical_yaml(const ExperimentConfig& config);

/// 16 hex digits of the FNV-1a hash of canonical_yaml, ignoring output and timing.
std::string run_id(const ExperimentConfig& config);

/// Parses "0.25", "pi", "pi/2", "3*pi/4", "-pi/8", "1e-3".
double parse_scalar(const std::string& text);

/// start..stop inclusive with the given step (tolerates round-off at stop).
std::vector<double> linear_grid(double start, double stop, double step);
/// `count` points from start to stop, linear or logarithmic.
std::vector<double> spaced_grid(double start, double stop, std::size_t count, bool logarithmic);

}  // namespace iprqs
