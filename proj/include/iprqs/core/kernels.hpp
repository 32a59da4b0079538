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
#include <map>
#include <span>
#include <vector>

#include "iprqs/core/gate.hpp"
#include "iprqs/core/qudit_state.hpp"

namespace iprqs {

namespace detail {

/// Flat-index offset of each local target index (first target most significant).
std::vector<Index> target_offsets(const SiteRegister& reg, std::span<const Site> targets);

/// Every flat index whose target digits are zero and whose control digits
/// match, in ascending order.
std::vector<Index> gate_bases(const SiteRegister& reg, std::span<const Site> targets,
                              std::span<const Control> controls);

/// Gate application on a bare amplitude buffer laid out over `reg`. The
/// buffer need not be normalized; gate fusion runs on identity columns.
void apply_gate_raw(CVector& amplitudes, const SiteRegister& reg, const GateOp& gate);

}  // namespace detail

/// In-place application; validates the gate shape but leaves the norm check
/// to the caller.
void apply_gate_inplace(QuditState& state, const GateOp& gate);

/// Value-returning application with a norm check at kDriftTolerance.
QuditState apply_gate(QuditState state, const GateOp& gate);

QuditState apply_sum_d(QuditState state, Site control, Site target);

/// Throws Errc::block_shape for overlapping blocks or blocks with differing
/// local-dimension profiles, Errc::gate_shape when the control is not a qubit.
QuditState apply_controlled_block_cycle(QuditState state, Site control,
                                        const std::vector<std::vector<Site>>& blocks);

/// Throws Errc::gate_shape if any listed site is not a qubit.
QuditState apply_qft(QuditState state, const std::vector<Site>& sites);

double outcome_probability(const QuditState& state, std::span<const Site> sites, std::span<const Digit> digits);

/// Probability of every joint outcome on `sites`, indexed mixed-radix with
/// sites[0] most significant.
std::vector<double> marginal_distribution(const QuditState& state, std::span<const Site> sites);

using OutcomeCounts = std::map<std::vector<Digit>, std::uint64_t>;

/// Multinomial draw by sequential conditional binomials; deterministic in `seed`.
std::vector<std::uint64_t> sample_counts(std::span<const double> probabilities, std::uint64_t n_shots,
                                         std::uint64_t seed);

OutcomeCounts sample_outcomes(const QuditState& state, std::span<const Site> sites, std::uint64_t n_shots,
                              std::uint64_t seed);

}  // namespace iprqs
