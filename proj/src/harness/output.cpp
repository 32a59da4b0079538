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

#include "iprqs/harness/output.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "iprqs/core/errors.hpp"
#include "iprqs/version.hpp"

namespace iprqs {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

std::string opt(const std::optional<double>& v) { return v ? format_number(*v) : ""; }

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw Error(Errc::io, "cannot create directory for " + path.string() + ": " + ec.message());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(Errc::io, "cannot open " + path.string() + " for writing");
  f << text;
  f.flush();
  if (!f) throw Error(Errc::io, "write failed for " + path.string());
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows, bool timing) {
  out << "experiment,variable,x,m,estimator,oracle,deviation,error_bound,trotter_bound,std_error,n_shots,aux,label,"
         "violation";
  if (timing) out << ",wall_ms";
  out << '\n';
  for (const auto& r : rows) {
    out << r.experiment << ',' << r.variable << ',' << format_number(r.x) << ',' << r.m << ','
        << format_number(r.estimator) << ',' << opt(r.oracle) << ',' << opt(r.deviation()) << ','
        << opt(r.error_bound) << ',' << opt(r.trotter_bound) << ',' << format_number(r.std_error) << ','
        << (r.n_shots ? std::to_string(*r.n_shots) : "") << ',' << opt(r.aux) << ',' << r.label << ','
        << (r.violation ? 1 : 0);
    if (timing) out << ',' << format_number(r.wall_ms);
    out << '\n';
  }
}

void emit_csv(const std::vector<ResultRow>& rows, const std::filesystem::path& path, bool timing) {
  std::ostringstream ss;
  write_csv(ss, rows, timing);
  write_text(path, ss.str());
}

void write_manifest(const ExperimentConfig& config, const std::string& id, const RunSummary& summary,
                    const std::filesystem::path& path) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "run_id" << YAML::Value << id;
  out << YAML::Key << "tool" << YAML::Value << "ipr-qsim";
  out << YAML::Key << "version" << YAML::Value << kVersion;
  out << YAML::Key << "experiment" << YAML::Value << config.experiment;
  out << YAML::Key << "seed" << YAML::Value;
  if (config.seed) {
    out << *config.seed;
  } else {
    out << YAML::Null;
  }
  out << YAML::Key << "csv" << YAML::Value << summary.csv_file;
  out << YAML::Key << "rows" << YAML::Value << summary.rows;
  out << YAML::Key << "violations" << YAML::Value << summary.violations;
  out << YAML::Key << "config" << YAML::Value << YAML::Load(canonical_yaml(config));
  out << YAML::EndMap;
  write_text(path, std::string(out.c_str()) + "\n");
}

}  // namespace iprqs
