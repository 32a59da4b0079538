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

namespace iprqs {

struct ResultRow {
  std::string experiment;
  std::string variable;  // name of x: t, h, m, trial, n_T
  double x = 0.0;
  int m = 0;  // 0 when not applicable
  double estimator = 0.0;
  std::optional<double> oracle;
  std::optional<double> error_bound;
  std::optional<double> trotter_bound;
  double std_error = 0.0;
  std::optional<std::uint64_t> n_shots;
  std::optional<double> aux;  // delta sigma^z for pxp_sweep
  std::string label;  // no commas
  bool violation = false;
  double wall_ms = 0.0;

  std::optional<double> deviation() const {
    if (!oracle) return std::nullopt;
    return estimator - *oracle;
  }
};

}  // namespace iprqs
