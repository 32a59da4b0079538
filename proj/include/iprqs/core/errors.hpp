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

#include <stdexcept>
#include <string>
#include <string_view>

namespace iprqs {

enum class Errc {
  invalid_register,
  invalid_basis_index,
  gate_shape,
  block_shape,
  numerical_drift,
  not_normalized,
  size_cap,
  unsupported_term,
  unsupported_register,
  not_hermitian,
  no_gap,
  thermal_match,
  domain,
  dimension_mismatch,
  config,
  io,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_register: return "invalid-register";
    case Errc::invalid_basis_index: return "invalid-basis-index";
    case Errc::gate_shape: return "gate-shape";
    case Errc::block_shape: return "block-shape";
    case Errc::numerical_drift: return "numerical-drift";
    case Errc::not_normalized: return "normalization";
    case Errc::size_cap: return "size-cap";
    case Errc::unsupported_term: return "unsupported-term";
    case Errc::unsupported_register: return "unsupported-register";
    case Errc::not_hermitian: return "hermiticity";
    case Errc::no_gap: return "no-gap";
    case Errc::thermal_match: return "thermal-match";
    case Errc::domain: return "domain";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::config: return "config";
    case Errc::io: return "io";
  }
  return "unknown";
}

}  // namespace iprqs
