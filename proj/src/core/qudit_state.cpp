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

#include "iprqs/core/qudit_state.hpp"

#include <bit>
#include <string>

#include "iprqs/core/errors.hpp"

namespace iprqs {

QuditState::QuditState(SiteRegister reg, CVector amplitudes) : reg_(std::move(reg)), amps_(std::move(amplitudes)) {
  if (static_cast<Index>(amps_.size()) != reg_.total_dim()) {
    throw Error(Errc::dimension_mismatch, "amplitude vector has length " + std::to_string(amps_.size()) +
                                              ", register needs " + std::to_string(reg_.total_dim()));
  }
  if (norm_drift() > kNormTolerance) {
    throw Error(Errc::not_normalized, "state norm deviates from 1 by " + std::to_string(norm_drift()));
  }
}

void QuditState::check_norm(double tol) const {
  const double drift = norm_drift();
  if (!(drift <= tol)) {
    throw Error(Errc::numerical_drift, "norm drift " + std::to_string(drift) + " exceeds " + std::to_string(tol));
  }
}

QuditState basis_state(const SiteRegister& reg, std::span<const Digit> digits) {
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(reg.total_dim()));
  amps[static_cast<Eigen::Index>(reg.index_of(digits))] = 1.0;
  return QuditState(reg, std::move(amps));
}

QuditState basis_state(const SiteRegister& reg, std::initializer_list<Digit> digits) {
  return basis_state(reg, std::span<const Digit>(digits.begin(), digits.size()));
}

QuditState tensor_product(const QuditState& a, const QuditState& b) {
  const auto& x = a.amplitudes();
  const auto& y = b.amplitudes();
  CVector out(x.size() * y.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    out.segment(i * y.size(), y.size()) = x[i] * y;
  }
  return QuditState(concat(a.site_register(), b.site_register()), std::move(out));
}

QuditState random_state(const SiteRegister& reg, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector amps(static_cast<Eigen::Index>(reg.total_dim()));
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    amps[i] = Complex(re, im);
  }
  amps.normalize();
  return QuditState(reg, std::move(amps));
}

QuditState ghz_state(const SiteRegister& reg) {
  const auto d = reg.uniform_dim();
  if (!d) throw Error(Errc::unsupported_register, "GHZ state needs a uniform register");
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(reg.total_dim()));
  amps[0] = 1.0 / std::sqrt(2.0);
  amps[amps.size() - 1] = 1.0 / std::sqrt(2.0);
  return QuditState(reg, std::move(amps));
}

QuditState product_state(std::size_t sites, double theta) {
  const SiteRegister reg = SiteRegister::uniform(sites, 2);
  CVector amps(static_cast<Eigen::Index>(reg.total_dim()));
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  for (Index i = 0; i < reg.total_dim(); ++i) {
    const int ones = std::popcount(i);
    amps[static_cast<Eigen::Index>(i)] = std::pow(c, static_cast<int>(sites) - ones) * std::pow(s, ones);
  }
  return QuditState(reg, std::move(amps));
}

}  // namespace iprqs
