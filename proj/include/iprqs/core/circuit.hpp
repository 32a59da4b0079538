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
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "iprqs/core/gate.hpp"
#include "iprqs/core/qudit_state.hpp"
#include "iprqs/core/sparse_state.hpp"

namespace iprqs {

/// A gate sequence applied `repetitions` times under shared controls.
/// Controlled powers of an evolution operator are emitted this way; the body
/// is shared between steps so executors can fuse it once.
struct ControlledRepeat {
  std::vector<Control> controls;
  std::shared_ptr<const std::vector<GateOp>> body;
  std::uint64_t repetitions = 1;
  std::string label;
};

using CircuitStep = std::variant<GateOp, ControlledRepeat>;

struct PlanInfo {
  std::string kind;
  int q = 0;
  int m = 0;
  double t = 0.0;
  int n_trotter = 0;
  std::string basis_label = "Z";
};

struct CircuitPlan {
  SiteRegister site_register;
  std::vector<CircuitStep> steps;
  std::vector<Site> readout_sites;
  std::vector<Digit> readout_target;
  PlanInfo info;

  void add(GateOp gate) { steps.emplace_back(std::move(gate)); }
  void add(ControlledRepeat block) { steps.emplace_back(std::move(block)); }
  void append(const std::vector<GateOp>& gates) {
    for (const auto& g : gates) steps.emplace_back(g);
  }

  /// Throws Errc::gate_shape on the first step that does not fit the register.
  void validate() const;
};

/// Elementary gate count with every repeated body expanded.
std::uint64_t gate_count(const CircuitPlan& plan);

/// Number of gates whose name matches `name` (repeats expanded).
std::uint64_t gate_count(const CircuitPlan& plan, std::string_view name);

struct ExecutionOptions {
  /// Repeated bodies whose support dimension is at most this are fused into
  /// one dense gate and raised to the repetition count by squaring.
  Index fuse_cap = 4096;
};

/// Runs the plan in place and checks the norm at kDriftTolerance afterwards.
void execute(const CircuitPlan& plan, QuditState& state, const ExecutionOptions& opts = {});
void execute(const CircuitPlan& plan, SparseState& state, const ExecutionOptions& opts = {});

/// Dense unitary of a gate sequence on the sorted union of its sites.
struct FusedBlock {
  std::vector<Site> support;
  CMatrix unitary;
};
FusedBlock fuse(const std::vector<GateOp>& gates, const SiteRegister& reg);

/// Full-register unitary of a plan; throws Errc::size_cap above `cap`.
CMatrix circuit_unitary(const CircuitPlan& plan, Index cap = Index{1} << 12);

/// Shifts every site index (targets and controls) by `offset`.
GateOp shift_sites(GateOp gate, Site offset);

/// U^n by binary powering.
CMatrix matrix_power(const CMatrix& u, std::uint64_t n);

}  // namespace iprqs
