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
#include <optional>
#include <string>

#include "iprqs/core/circuit.hpp"
#include "iprqs/core/qudit_state.hpp"
#include "iprqs/core/sparse_state.hpp"

namespace iprqs {

struct IprEstimate {
  int q = 2;
  double point_value = 0.0;
  std::optional<std::uint64_t> n_shots;  // empty in exact mode
  double std_error = 0.0;
  std::optional<double> error_bound;
  int m = 0;
  double t = 0.0;
  int n_trotter = 0;
  std::string basis_label = "Z";

  bool exact() const { return !n_shots.has_value(); }
};

/// A plan together with the state it runs on:
/// |0>^{ancillas} (x) |psi>^{copies} (x) |0>^{blank_sites}.
struct EstimatorCircuit {
  CircuitPlan plan;
  QuditState psi;
  std::size_t ancillas = 0;
  std::size_t copies = 0;
  std::size_t blank_sites = 0;

  QuditState initial_dense() const;
  SparseState initial_sparse() const;
};

enum class Backend { automatic, dense, sparse };

/// Registers up to this size run on the dense backend under Backend::automatic.
inline constexpr Index kAutoDenseLimit = Index{1} << 16;

/// Readout-target probability after executing the circuit.
double readout_probability(const EstimatorCircuit& circuit, Backend backend = Backend::automatic);

/// Readout-site distribution after executing the circuit.
std::vector<double> readout_distribution(const EstimatorCircuit& circuit, Backend backend = Backend::automatic);

}  // namespace iprqs
