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

#include <optional>
#include <span>
#include <vector>

#include "iprqs/core/types.hpp"

namespace iprqs {

/// Mixed-radix register of sites. Site 0 is the most significant digit of
/// the flat amplitude index; every kernel and circuit in the library uses
/// this convention.
class SiteRegister {
 public:
  SiteRegister() = default;
  explicit SiteRegister(std::vector<Digit> local_dims);

  static SiteRegister uniform(std::size_t sites, Digit dim) {
    return SiteRegister(std::vector<Digit>(sites, dim));
  }

  std::size_t size() const noexcept { return dims_.size(); }
  Digit dim(Site s) const { return dims_.at(s); }
  const std::vector<Digit>& local_dims() const noexcept { return dims_; }
  Index total_dim() const noexcept { return total_; }
  Index stride(Site s) const { return strides_.at(s); }

  /// Common local dimension, or nullopt for a mixed register.
  std::optional<Digit> uniform_dim() const;

  Index index_of(std::span<const Digit> digits) const;
  std::vector<Digit> digits_of(Index index) const;
  Digit digit_at(Index index, Site s) const { return static_cast<Digit>((index / strides_[s]) % dims_[s]); }

  /// Product of local dimensions over a subset of sites.
  Index subspace_dim(std::span<const Site> sites) const;

  void check_sites(std::span<const Site> sites, std::string_view what) const;

  friend bool operator==(const SiteRegister& a, const SiteRegister& b) { return a.dims_ == b.dims_; }

 private:
  std::vector<Digit> dims_;
  std::vector<Index> strides_;
  Index total_ = 1;
};

SiteRegister concat(const SiteRegister& a, const SiteRegister& b);

}  // namespace iprqs
