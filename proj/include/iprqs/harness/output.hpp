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

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "iprqs/harness/config.hpp"
#include "iprqs/harness/result.hpp"

namespace iprqs {

/// "%.12g"; NaN and infinities as nan / inf / -inf.
std::string format_number(double v);

/// Header plus one line per row, LF endings. wall_ms is written only with `timing`.
void write_csv(std::ostream& out, const std::vector<ResultRow>& rows, bool timing = false);

/// Creates parent directories. Throws Errc::io with the path on failure.
void emit_csv(const std::vector<ResultRow>& rows, const std::filesystem::path& path, bool timing = false);

struct RunSummary {
  std::size_t rows = 0;
  std::size_t violations = 0;
  std::string csv_file;
};

/// YAML manifest with run id, library version, seed and the full config.
void write_manifest(const ExperimentConfig& config, const std::string& id, const RunSummary& summary,
                    const std::filesystem::path& path);

}  // namespace iprqs
