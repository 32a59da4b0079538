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

#include <string>
#include <variant>
#include <vector>

#include "iprqs/core/site_register.hpp"
#include "iprqs/core/types.hpp"

namespace iprqs {

struct Control {
  Site site;
  Digit value = 1;
  friend bool operator==(const Control&, const Control&) = default;
};

/// Explicit unitary on the target subspace (first target most significant).
struct DenseAction {
  CMatrix unitary;
};

/// Moves target digits around: output position k receives the input digit
/// found at position source[k]. Covers SWAP and the block cycle.
struct SitePermutation {
  std::vector<std::size_t> source;
};

/// Two targets (a, b) of equal dimension d: |a, b> -> |a, b + a mod d>, or
/// b - a with `subtract`. CNOT is the d = 2 case.
struct ModularAdd {
  bool subtract = false;
};

using GateAction = std::variant<DenseAction, SitePermutation, ModularAdd>;

struct GateOp {
  std::vector<Site> targets;
  std::vector<Control> controls;
  GateAction action;
  std::string name;

  bool is_dense() const noexcept { return std::holds_alternative<DenseAction>(action); }

  /// Checks sites, disjointness, control values and unitary shape against `reg`.
  /// Throws Errc::gate_shape.
  void validate(const SiteRegister& reg) const;
};

// Single-site and two-site building blocks.
GateOp hadamard(Site s);
GateOp pauli_x(Site s);
GateOp phase_shift(Site s, double phi);
GateOp cnot(Site control, Site target);
GateOp sum_d(Site control, Site target);
GateOp swap(Site a, Site b);

/// Dense gate; throws Errc::gate_shape when `u` is not square or not unitary
/// within kUnitaryTolerance.
GateOp dense_gate(std::vector<Site> targets, CMatrix u, std::string name = "U");

/// Adds computational-basis controls to a gate.
GateOp controlled(GateOp gate, std::vector<Control> controls);

/// Cyclic shift of equal-shape site blocks, block k -> block k+1 (mod q),
/// conditioned on `control` = 1. Throws Errc::block_shape when blocks overlap,
/// differ in length, or when `reg` is given and their local dims differ.
GateOp controlled_block_cycle(Site control, const std::vector<std::vector<Site>>& blocks);

/// H / controlled-phase / swap decomposition of |x> -> 2^{-m/2} sum_k e^{2 pi i x k / 2^m} |k>,
/// with sites[0] the most significant bit of both x and k.
std::vector<GateOp> qft_gates(const std::vector<Site>& sites);

GateOp adjoint(const GateOp& gate);

/// Unitary restricted to the target subspace, for any action kind.
CMatrix local_matrix(const GateOp& gate, const SiteRegister& reg);

/// For permutation actions: output local index for each input local index.
std::vector<Index> local_permutation(const GateOp& gate, const SiteRegister& reg);

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u, double tol = kUnitaryTolerance) {
  if (u.rows() != u.cols()) return false;
  using Mat = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Mat prod = u.adjoint() * u;
  return (prod - Mat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace iprqs
