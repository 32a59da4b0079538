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

#include "iprqs/core/site_register.hpp"

#include <limits>
#include <string>

#include "iprqs/core/errors.hpp"

namespace iprqs {

SiteRegister::SiteRegister(std::vector<Digit> local_dims) : dims_(std::move(local_dims)) {
  strides_.assign(dims_.size(), 1);
  total_ = 1;
  for (std::size_t k = dims_.size(); k-- > 0;) {
    if (dims_[k] < 2) {
      throw Error(Errc::invalid_register, "site " + std::to_string(k) + " has local dimension < 2");
    }
    strides_[k] = total_;
    if (total_ > (std::numeric_limits<Index>::max() >> 2) / dims_[k]) {
      throw Error(Errc::size_cap, "register dimension overflows the index type");
    }
    total_ *= dims_[k];
  }
}

std::optional<Digit> SiteRegister::uniform_dim() const {
  if (dims_.empty()) return std::nullopt;
  for (Digit d : dims_) {
    if (d != dims_.front()) return std::nullopt;
  }
  return dims_.front();
}

Index SiteRegister::index_of(std::span<const Digit> digits) const {
  if (digits.size() != dims_.size()) {
    throw Error(Errc::invalid_basis_index, "expected " + std::to_string(dims_.size()) + " digits, got " +
                                               std::to_string(digits.size()));
  }
  Index idx = 0;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (digits[k] >= dims_[k]) {
      throw Error(Errc::invalid_basis_index, "digit " + std::to_string(digits[k]) + " out of range at site " +
                                                 std::to_string(k));
    }
    idx += digits[k] * strides_[k];
  }
  return idx;
}

std::vector<Digit> SiteRegister::digits_of(Index index) const {
  std::vector<Digit> out(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    out[k] = static_cast<Digit>(index % dims_[k]);
    index /= dims_[k];
  }
  return out;
}

Index SiteRegister::subspace_dim(std::span<const Site> sites) const {
  Index d = 1;
  for (Site s : sites) d *= dims_.at(s);
  return d;
}

void SiteRegister::check_sites(std::span<const Site> sites, std::string_view what) const {
  for (Site s : sites) {
    if (s >= dims_.size()) {
      throw Error(Errc::gate_shape, std::string(what) + ": site " + std::to_string(s) + " outside register of " +
                                        std::to_string(dims_.size()) + " sites");
    }
  }
}

SiteRegister concat(const SiteRegister& a, const SiteRegister& b) {
  std::vector<Digit> dims = a.local_dims();
  dims.insert(dims.end(), b.local_dims().begin(), b.local_dims().end());
  return SiteRegister(std::move(dims));
}

}  // namespace iprqs
