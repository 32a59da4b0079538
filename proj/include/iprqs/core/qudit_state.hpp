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

#include <random>
#include <span>

#include "iprqs/core/site_register.hpp"
#include "iprqs/core/types.hpp"

namespace iprqs {

/// Normalized amplitude vector over a SiteRegister.
class QuditState {
 public:
  QuditState() = default;

  /// Takes ownership of `amplitudes`; throws Errc::not_normalized when the
  /// norm is off by more than kNormTolerance.
  QuditState(SiteRegister reg, CVector amplitudes);

  const SiteRegister& site_register() const noexcept { return reg_; }
  const CVector& amplitudes() const noexcept { return amps_; }
  Index dim() const noexcept { return reg_.total_dim(); }

  /// Kernels write through this; callers are responsible for calling
  /// check_norm() once a sequence of updates is done.
  CVector& mutable_amplitudes() noexcept { return amps_; }

  double norm_drift() const { return std::abs(amps_.norm() - 1.0); }

  /// Throws Errc::numerical_drift when |norm - 1| > tol.
  void check_norm(double tol = kDriftTolerance) const;

 private:
  SiteRegister reg_;
  CVector amps_;
};

QuditState basis_state(const SiteRegister& reg, std::span<const Digit> digits);
QuditState basis_state(const SiteRegister& reg, std::initializer_list<Digit> digits);

/// Kronecker product; the register of `a` comes first.
QuditState tensor_product(const QuditState& a, const QuditState& b);

/// Haar-distributed state from normalized complex Gaussians.
QuditState random_state(const SiteRegister& reg, std::mt19937_64& rng);

/// Uniform superposition (|0..0> + |d-1..d-1>)/sqrt(2) on a uniform register.
QuditState ghz_state(const SiteRegister& reg);

/// (cos(theta)|0> + sin(theta)|1>)^{\otimes L}.
QuditState product_state(std::size_t sites, double theta);

}  // namespace iprqs
