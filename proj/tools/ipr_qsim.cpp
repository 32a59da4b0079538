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

// ipr-qsim: run IPR estimator experiments and invariant checks.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "iprqs/core/errors.hpp"
#include "iprqs/harness/config.hpp"
#include "iprqs/harness/experiments.hpp"
#include "iprqs/harness/output.hpp"
#include "iprqs/harness/verify.hpp"
#include "iprqs/version.hpp"

namespace fs = std::filesystem;

namespace {

struct RunArgs {
  std::string config;
  std::string experiment;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string mode;
  std::optional<std::int64_t> shots;
  bool timing = false;
};

struct VerifyArgs {
  std::uint64_t seed = 7;
  int ensemble = 500;
  std::string out;
};

int write_outputs(const iprqs::ExperimentConfig& cfg, const std::vector<iprqs::ResultRow>& rows) {
  const fs::path dir(cfg.output);
  const std::string csv = cfg.experiment + ".csv";
  iprqs::emit_csv(rows, dir / csv, cfg.timing);
  const iprqs::RunSummary summary{rows.size(), iprqs::count_violations(rows), csv};
  iprqs::write_manifest(cfg, iprqs::run_id(cfg), summary, dir / (cfg.experiment + ".manifest.yaml"));
  std::printf("%s: %zu rows, %zu violations -> %s\n", cfg.experiment.c_str(), summary.rows, summary.violations,
              (dir / csv).string().c_str());
  return summary.violations == 0 ? 0 : 1;
}

int run(const RunArgs& a) {
  // Precedence: command-line flags, then the config file, then built-in defaults.
  iprqs::ExperimentConfig cfg = iprqs::load_config(a.config, a.experiment);
  if (!a.out.empty()) cfg.output = a.out;
  if (a.seed) cfg.seed = *a.seed;
  if (!a.mode.empty()) cfg.mode = a.mode == "sampled" ? iprqs::Mode::sampled : iprqs::Mode::exact;
  if (a.shots) cfg.n_shots = *a.shots;
  if (a.timing) cfg.timing = true;
  iprqs::validate(cfg);
  return write_outputs(cfg, iprqs::run_experiment(cfg));
}

int verify(const VerifyArgs& a) {
  std::size_t violations = 0;
  for (const auto& r : iprqs::run_property_suites(a.seed)) {
    std::printf("%-4s %-55s %zu/%zu%s%s\n", r.violations == 0 ? "ok" : "FAIL", r.name.c_str(),
                r.checked - r.violations, r.checked, r.detail.empty() ? "" : "  first failure: ",
                r.detail.c_str());
    violations += r.violations;
  }
  iprqs::ExperimentConfig cfg = iprqs::default_config("bound_study");
  cfg.seed = a.seed;
  cfg.ensemble = a.ensemble;
  iprqs::validate(cfg);
  const auto rows = iprqs::run_bound_study(cfg);
  const std::size_t bound_violations = iprqs::count_violations(rows);
  std::printf("%-4s %-55s %zu/%zu\n", bound_violations == 0 ? "ok" : "FAIL", "bound study",
              rows.size() - bound_violations, rows.size());
  violations += bound_violations;
  if (!a.out.empty()) {
    cfg.output = a.out;
    write_outputs(cfg, rows);
  }
  std::printf("%zu violation(s)\n", violations);
  return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse participation ratio estimators on a qudit statevector simulator", "ipr-qsim"};
  app.set_version_flag("--version", std::string(iprqs::kVersion));
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "Run an experiment from a YAML config");
  run_cmd->add_option("config", run_args.config, "Config file")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--experiment", run_args.experiment, "Experiment name, overriding the config")
      ->check(CLI::IsMember(iprqs::experiment_names()));
  run_cmd->add_option("--out", run_args.out, "Output directory");
  run_cmd->add_option("--seed", run_args.seed, "Random seed");
  run_cmd->add_option("--mode", run_args.mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
  run_cmd->add_option("--shots", run_args.shots, "Shots per point in sampled mode");
  run_cmd->add_flag("--timing", run_args.timing, "Add a wall_ms column (breaks byte-identical reruns)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run the property suites and the bound study");
  verify_cmd->add_option("--seed", verify_args.seed, "Random seed")->capture_default_str();
  verify_cmd->add_option("--ensemble", verify_args.ensemble, "Random Hermitian matrices in the bound study")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--out", verify_args.out, "Write the bound-study CSV and manifest here");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run_cmd) return run(run_args);
    return verify(verify_args);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "ipr-qsim: %s\n", e.what());
    return 2;
  }
}
