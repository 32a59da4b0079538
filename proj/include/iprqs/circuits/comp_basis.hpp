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
#include <vector>

#include "iprqs/circuits/estimator.hpp"

namespace iprqs {

/// Site layout of the copy-based circuit: [ancilla][copy 0 .. copy q-1][blank 1 .. blank q-1].
struct CompBasisLayout {
  std::size_t n = 0;
  int q = 2;

  Site ancilla() const { return 0; }
  Site copy_site(int copy, std::size_t s) const { return 1 + static_cast<Site>(copy) * n + s; }
  Site blank_site(int blank, std::size_t s) const {
    return 1 + static_cast<Site>(q) * n + static_cast<Site>(blank - 1) * n + s;
  }
};

/// Per-site unitaries V taking target-basis states to computational basis
/// states; applied to every copy before the entangling layer.
using BasisRotation = std::vector<CMatrix>;

/// Hadamard on each of `sites` sites: the Pauli-X eigenbasis.
BasisRotation basis_rotation_x(std::size_t sites);

/// Ancilla H, SUM_d (CNOT for d = 2) from copy k onto blank k for k >= 1,
/// controlled cycle of the q copies, ancilla H; readout ancilla = 0.
/// Throws Errc::unsupported_register for mixed local dimensions and
/// Errc::domain for q < 2.
EstimatorCircuit build_comp_basis_circuit(const QuditState& psi, int q,
                                          const std::optional<BasisRotation>& rotation = std::nullopt,
                                          std::string basis_label = "");

/// 2 P0 - 1 from the exact ancilla marginal.
IprEstimate run_comp_basis_exact(const EstimatorCircuit& circuit, Backend backend = Backend::automatic);

/// 2 n0 / n_shots - 1 with std_error 2 sqrt(P(1-P)/n_shots). Throws Errc::domain for n_shots = 0.
IprEstimate run_comp_basis_sampled(const EstimatorCircuit& circuit, std::uint64_t n_shots, std::uint64_t seed,
                                   Backend backend = Backend::automatic);

/// ceil(q / epsilon^2), unit constant. Throws Errc::domain unless epsilon > 0.
std::uint64_t required_shots(int q, double epsilon);

}  // namespace iprqs
