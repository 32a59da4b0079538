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

#include "iprqs/harness/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "iprqs/core/errors.hpp"
#include "iprqs/core/types.hpp"

namespace iprqs {

std::string to_string(Mode mode) { return mode == Mode::exact ? "exact" : "sampled"; }

double parse_scalar(const std::string& text) {
  static const std::regex pattern(R"(^\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)?\s*(\*?\s*pi)?\s*(?:/\s*(\d+\.?\d*(?:[eE][-+]?\d+)?))?\s*$)");
  static const std::regex neg_pi(R"(^\s*-\s*pi)");
  std::smatch m;
  std::string s = text;
  double sign = 1.0;
  if (std::regex_search(s, neg_pi)) {
    sign = -1.0;
    s = s.substr(s.find('-') + 1);
  }
  if (!std::regex_match(s, m, pattern) || (!m[1].matched && !m[2].matched)) {
    throw Error(Errc::config, "cannot parse number '" + text + "'");
  }
  double v = m[1].matched ? std::stod(m[1].str()) : 1.0;
  if (m[2].matched) v *= kPi;
  if (m[3].matched) {
    const double den = std::stod(m[3].str());
    if (den == 0.0) throw Error(Errc::config, "division by zero in '" + text + "'");
    v /= den;
  }
  return sign * v;
}

std::vector<double> linear_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw Error(Errc::config, "grid step must be positive");
  if (stop < start) throw Error(Errc::config, "grid stop is below start");
  std::vector<double> out;
  const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9));
  for (std::size_t k = 0; k <= n; ++k) out.push_back(start + static_cast<double>(k) * step);
  return out;
}

std::vector<double> spaced_grid(double start, double stop, std::size_t count, bool logarithmic) {
  if (count == 0) throw Error(Errc::config, "grid count must be positive");
  if (logarithmic && !(start > 0.0 && stop > 0.0)) throw Error(Errc::config, "log grid needs positive bounds");
  std::vector<double> out;
  for (std::size_t k = 0; k < count; ++k) {
    const double f = count == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(count - 1);
    out.push_back(logarithmic ? start * std::pow(stop / start, f) : start + f * (stop - start));
  }
  return out;
}

ExperimentConfig default_config(const std::string& experiment) {
  ExperimentConfig c;
  c.experiment = experiment;
  if (experiment == "oat_sweep") {
    c.sites = 4;
    c.t_grid = linear_grid(0.0, kPi / 2.0, kPi / 100.0);
  } else if (experiment == "pxp_sweep") {
    c.sites = 8;
    c.h_grid = linear_grid(0.0, 1.0, 0.05);
    c.m_list = {3, 4, 5};
    c.t = 1.0;
    c.n_trotter = 10;
  } else if (experiment == "aklt_sweep") {
    c.sites = 4;
    c.d = 3;
    c.h_grid = {0.0};
    const auto logs = spaced_grid(1e-2, 10.0, 24, true);
    c.h_grid.insert(c.h_grid.end(), logs.begin(), logs.end());
  } else if (experiment == "m_convergence") {
    c.model = "pxp";
    c.sites = 6;
    c.h = 0.5;
    c.m_list = {1, 2, 3, 4, 5, 6, 7, 8};
    c.t = 0.0;
    c.exact_evolution = true;
  } else if (experiment == "bound_study") {
    c.m_list = {2, 3, 4, 5, 6};
    c.seed = 7;
    c.t = 1.0;
    c.trotter_steps = {2, 4, 8, 16, 32, 64};
    c.exact_evolution = true;
  } else {
    throw Error(Errc::config, "unknown experiment '" + experiment + "'");
  }
  return c;
}

namespace {

double scalar(const YAML::Node& n, const std::string& key) {
  if (!n.IsScalar()) throw Error(Errc::config, key + ": expected a number");
  return parse_scalar(n.Scalar());
}

template <typename T>
T integer(const YAML::Node& n, const std::string& key) {
  try {
    return n.as<T>();
  } catch (const YAML::Exception&) {
    throw Error(Errc::config, key + ": expected an integer");
  }
}

bool boolean(const YAML::Node& n, const std::string& key) {
  try {
    return n.as<bool>();
  } catch (const YAML::Exception&) {
    throw Error(Errc::config, key + ": expected true or false");
  }
}

std::vector<double> grid(const YAML::Node& n, const std::string& key) {
  std::vector<double> out;
  if (n.IsSequence()) {
    for (const auto& v : n) out.push_back(scalar(v, key));
    return out;
  }
  if (n.IsScalar()) return {scalar(n, key)};
  if (!n.IsMap()) throw Error(Errc::config, key + ": expected a list or a {start, stop, step|count} map");
  for (const auto& v : n["prepend"]) out.push_back(scalar(v, key));
  if (n["start"] || n["stop"]) {
    if (!n["start"] || !n["stop"]) throw Error(Errc::config, key + ": start and stop are both required");
    const double start = scalar(n["start"], key + ".start");
    const double stop = scalar(n["stop"], key + ".stop");
    std::vector<double> body;
    if (n["step"]) {
      body = linear_grid(start, stop, scalar(n["step"], key + ".step"));
    } else if (n["count"]) {
      const auto count = integer<std::int64_t>(n["count"], key + ".count");
      if (count < 1) throw Error(Errc::config, key + ".count must be positive");
      const std::string spacing = n["spacing"] ? n["spacing"].as<std::string>() : "linear";
      if (spacing != "linear" && spacing != "log") throw Error(Errc::config, key + ".spacing must be linear or log");
      body = spaced_grid(start, stop, static_cast<std::size_t>(count), spacing == "log");
    } else {
      throw Error(Errc::config, key + ": step or count is required");
    }
    out.insert(out.end(), body.begin(), body.end());
  }
  for (const auto& v : n["append"]) out.push_back(scalar(v, key));
  return out;
}

std::vector<int> int_list(const YAML::Node& n, const std::string& key) {
  std::vector<int> out;
  if (n.IsScalar()) return {integer<int>(n, key)};
  if (!n.IsSequence()) throw Error(Errc::config, key + ": expected a list of integers");
  for (const auto& v : n) out.push_back(integer<int>(v, key));
  return out;
}

const std::vector<std::string> kKnownKeys{
    "experiment", "model",   "L",        "q",        "d",        "h_grid",        "t_grid",
    "m_list",     "h",       "t",        "n_trotter", "periodic", "exact_evolution", "mode",
    "n_shots",    "seed",    "ensemble", "ensemble_qubits", "trotter_steps", "output", "timing"};

}  // namespace

ExperimentConfig parse_config(const std::string& yaml_text, const std::string& experiment_override) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw Error(Errc::config, std::string("invalid YAML: ") + e.what());
  }
  if (root.IsNull()) root = YAML::Node(YAML::NodeType::Map);
  if (!root.IsMap()) throw Error(Errc::config, "config must be a key-value mapping");
  for (const auto& kv : root) {
    const auto key = kv.first.as<std::string>();
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
      throw Error(Errc::config, "unknown key '" + key + "'");
    }
  }
  // Null values, as written by canonical_yaml, leave the default in place.
  auto has = [&](const char* key) { return root[key] && !root[key].IsNull(); };
  std::string name = experiment_override;
  if (name.empty() && has("experiment")) name = root["experiment"].as<std::string>();
  if (name.empty()) throw Error(Errc::config, "no experiment named");
  ExperimentConfig c = default_config(name);

  if (has("model")) c.model = root["model"].as<std::string>();
  if (has("L")) {
    const auto v = integer<std::int64_t>(root["L"], "L");
    if (v < 1) throw Error(Errc::config, "L must be positive");
    c.sites = static_cast<std::size_t>(v);
  }
  if (has("q")) c.q = integer<int>(root["q"], "q");
  if (has("d")) {
    const auto v = integer<std::int64_t>(root["d"], "d");
    if (v < 2) throw Error(Errc::config, "d must be at least 2");
    c.d = static_cast<unsigned>(v);
  }
  if (has("h_grid")) c.h_grid = grid(root["h_grid"], "h_grid");
  if (has("t_grid")) c.t_grid = grid(root["t_grid"], "t_grid");
  if (has("m_list")) c.m_list = int_list(root["m_list"], "m_list");
  if (has("h")) c.h = scalar(root["h"], "h");
  if (has("t")) c.t = scalar(root["t"], "t");
  if (has("n_trotter")) c.n_trotter = integer<int>(root["n_trotter"], "n_trotter");
  if (has("periodic")) c.periodic = boolean(root["periodic"], "periodic");
  if (has("exact_evolution")) c.exact_evolution = boolean(root["exact_evolution"], "exact_evolution");
  if (has("mode")) {
    const auto m = root["mode"].as<std::string>();
    if (m != "exact" && m != "sampled") throw Error(Errc::config, "mode must be exact or sampled");
    c.mode = m == "exact" ? Mode::exact : Mode::sampled;
  }
  if (has("n_shots")) c.n_shots = integer<std::int64_t>(root["n_shots"], "n_shots");
  if (has("seed")) c.seed = integer<std::uint64_t>(root["seed"], "seed");
  if (has("ensemble")) c.ensemble = integer<int>(root["ensemble"], "ensemble");
  if (has("ensemble_qubits")) {
    const auto v = integer<std::int64_t>(root["ensemble_qubits"], "ensemble_qubits");
    if (v < 1) throw Error(Errc::config, "ensemble_qubits must be positive");
    c.ensemble_qubits = static_cast<std::size_t>(v);
  }
  if (has("trotter_steps")) c.trotter_steps = int_list(root["trotter_steps"], "trotter_steps");
  if (has("output")) c.output = root["output"].as<std::string>();
  if (has("timing")) c.timing = boolean(root["timing"], "timing");
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path, const std::string& experiment_override) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot read config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_config(ss.str(), experiment_override);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void validate(const ExperimentConfig& c) {
  auto fail = [](const std::string& what) { throw Error(Errc::config, what); };
  auto finite_grid = [&](const std::vector<double>& g, const std::string& key) {
    if (g.empty()) fail(key + " is empty");
    for (double v : g) {
      if (!std::isfinite(v)) fail(key + " contains a non-finite value");
    }
  };
  const auto& names = experiment_names();
  if (std::find(names.begin(), names.end(), c.experiment) == names.end()) {
    fail("unknown experiment '" + c.experiment + "'");
  }
  if (c.n_shots && *c.n_shots < 1) fail("n_shots must be positive");
  if (c.mode == Mode::sampled && (!c.n_shots || !c.seed)) fail("sampled mode needs n_shots and seed");
  for (int m : c.m_list) {
    if (m < 1) fail("m_list entries must be at least 1");
    if (m > 20) fail("m_list entries above 20 are not supported");
  }
  if (c.q < 2) fail("q must be at least 2");
  if (c.n_trotter < 1) fail("n_trotter must be at least 1");
  if (!std::isfinite(c.t) || c.t < 0.0) fail("t must be finite and non-negative");
  if (!std::isfinite(c.h)) fail("h must be finite");

  if (c.experiment == "oat_sweep") {
    finite_grid(c.t_grid, "t_grid");
    if (c.sites < 2) fail("oat_sweep needs L >= 2");
  } else if (c.experiment == "pxp_sweep") {
    finite_grid(c.h_grid, "h_grid");
    if (c.m_list.empty()) fail("m_list is empty");
    if (!(c.t > 0.0)) fail("pxp_sweep needs t > 0");
    if (c.sites < (c.periodic ? 3u : 2u)) fail("pxp_sweep needs more sites");
  } else if (c.experiment == "aklt_sweep") {
    finite_grid(c.h_grid, "h_grid");
    if (c.sites < 2) fail("aklt_sweep needs L >= 2");
  } else if (c.experiment == "m_convergence") {
    if (c.m_list.empty()) fail("m_list is empty");
    if (c.model != "pxp" && c.model != "aklt" && c.model != "oat") fail("model must be pxp, aklt or oat");
  } else if (c.experiment == "bound_study") {
    if (c.m_list.empty()) fail("m_list is empty");
    if (c.ensemble < 0) fail("ensemble must be non-negative");
    if (!c.seed) fail("bound_study needs a seed");
    for (int n : c.trotter_steps) {
      if (n < 1) fail("trotter_steps entries must be positive");
    }
  }
}

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string canonical_yaml(const ExperimentConfig& c) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "experiment" << YAML::Value << c.experiment;
  out << YAML::Key << "model" << YAML::Value << c.model;
  out << YAML::Key << "L" << YAML::Value << c.sites;
  out << YAML::Key << "q" << YAML::Value << c.q;
  out << YAML::Key << "d" << YAML::Value << c.d;
  auto dgrid = [&](const char* key, const std::vector<double>& g) {
    out << YAML::Key << key << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (double v : g) out << num(v);
    out << YAML::EndSeq;
  };
  auto igrid = [&](const char* key, const std::vector<int>& g) {
    out << YAML::Key << key << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (int v : g) out << v;
    out << YAML::EndSeq;
  };
  dgrid("h_grid", c.h_grid);
  dgrid("t_grid", c.t_grid);
  igrid("m_list", c.m_list);
  out << YAML::Key << "h" << YAML::Value << num(c.h);
  out << YAML::Key << "t" << YAML::Value << num(c.t);
  out << YAML::Key << "n_trotter" << YAML::Value << c.n_trotter;
  out << YAML::Key << "periodic" << YAML::Value << c.periodic;
  out << YAML::Key << "exact_evolution" << YAML::Value << c.exact_evolution;
  out << YAML::Key << "mode" << YAML::Value << to_string(c.mode);
  out << YAML::Key << "n_shots" << YAML::Value;
  if (c.n_shots) {
    out << *c.n_shots;
  } else {
    out << YAML::Null;
  }
  out << YAML::Key << "seed" << YAML::Value;
  if (c.seed) {
    out << *c.seed;
  } else {
    out << YAML::Null;
  }
  out << YAML::Key << "ensemble" << YAML::Value << c.ensemble;
  out << YAML::Key << "ensemble_qubits" << YAML::Value << c.ensemble_qubits;
  igrid("trotter_steps", c.trotter_steps);
  out << YAML::Key << "output" << YAML::Value << c.output;
  out << YAML::Key << "timing" << YAML::Value << c.timing;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

std::string run_id(const ExperimentConfig& config) {
  // Where the results go does not change what they are.
  ExperimentConfig c = config;
  c.output.clear();
  c.timing = false;
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical_yaml(c)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace iprqs
