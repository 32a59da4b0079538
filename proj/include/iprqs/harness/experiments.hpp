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
#include <vector>

#include "iprqs/core/qudit_state.hpp"
#include "iprqs/harness/config.hpp"
#include "iprqs/harness/result.hpp"

namespace iprqs {

/// Exact-mode tolerance between copy-circuit estimates and the direct IPR.
inline constexpr double kCircuitTolerance = 1e-8;

/// Slack on the lower edge of 0 <= P - I <= bound.
inline constexpr double kBoundSlack = 1e-12;

/// |0101...> on L qubits.
QuditState neel_state(std::size_t sites);

/// Per-point seed derived from the run seed and the point index.
std::uint64_t point_seed(std::uint64_t seed, std::uint64_t index);

std::vector<ResultRow> run_oat_sweep(const ExperimentConfig& config);
std::vector<ResultRow> run_pxp_sweep(const ExperimentConfig& config);
std::vector<ResultRow> run_aklt_sweep(const ExperimentConfig& config);
std::vector<ResultRow> run_m_convergence(const ExperimentConfig& config);
std::vector<ResultRow> run_bound_study(const ExperimentConfig& config);

/// Validates, then dispatches on config.experiment.
std::vector<ResultRow> run_experiment(const ExperimentConfig& config);

std::size_t count_violations(const std::vector<ResultRow>& rows);

}  // namespace iprqs
