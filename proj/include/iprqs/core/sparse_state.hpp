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

#include <span>
#include <utility>
#include <vector>

#include "iprqs/core/gate.hpp"
#include "iprqs/core/qudit_state.hpp"

namespace iprqs {

/// Exact state stored as its nonzero support.
///
/// Used for the copy-based estimator circuits, whose registers grow as
/// d^{n(2q-1)} while the reachable support stays at 2 d^{nq}. Same
/// gate semantics and site ordering as QuditState.
class SparseState {
 public:
  using Entry = std::pair<Index, Complex>;

  SparseState() = default;
  SparseState(SiteRegister reg, std::vector<Entry> entries);

  static SparseState from_dense(const QuditState& state);

  const SiteRegister& site_register() const noexcept { return reg_; }
  /// Sorted by flat index.
  const std::vector<Entry>& entries() const;
  /// Same entries in storage order; cheaper when order does not matter.
  const std::vector<Entry>& unordered_entries() const noexcept { return entries_; }
  std::size_t support_size() const noexcept { return entries_.size(); }

  /// Densifies; throws Errc::size_cap above `cap` amplitudes.
  QuditState to_dense(Index cap = Index{1} << 24) const;

  double norm_drift() const;
  void check_norm(double tol = kDriftTolerance) const;

  void apply(const GateOp& gate);

 private:
  void apply_dense(const GateOp& gate, const CMatrix& u);
  void apply_permutation(const GateOp& gate);
  bool controls_match(Index idx, const std::vector<Control>& controls) const;

  SiteRegister reg_;
  // Gates leave the support unsorted; entries() restores order.
  mutable std::vector<Entry> entries_;
  mutable bool sorted_ = true;
};

SparseState tensor_product(const SparseState& a, const SparseState& b);

double outcome_probability(const SparseState& state, std::span<const Site> sites, std::span<const Digit> digits);
std::vector<double> marginal_distribution(const SparseState& state, std::span<const Site> sites);

}  // namespace iprqs
