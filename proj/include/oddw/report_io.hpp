// Copyright 2026 The oddw Authors
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
#include <optional>
#include <string>

#include <json.hpp>

#include "oddw/conjecture.hpp"

namespace oddw {

/// {"ell", "parity", "k_weights", "boundary"}
nlohmann::ordered_json params_json(const ArrayParams& params);

/// Decimal strings, one per coefficient.
nlohmann::ordered_json series_json(const CoeffSeries& series);
CoeffSeries series_from_json(const nlohmann::json& j);

/// Exponents e_1..e_N as decimal strings.
nlohmann::ordered_json exponents_json(const ExponentSeq& e);

/// Report export. Field order is stable; see docs/schemas.md.
nlohmann::ordered_json report_json(const ConjectureReport& report);

/// On-disk cache of counted series, one JSON file per parameter set. A
/// cached series for limit N answers every request with limit <= N. Entries
/// written by another tool version are ignored. Writes go to a temporary
/// file that is then renamed over the entry.
class SeriesCache {
 public:
  explicit SeriesCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path entry_path(const ArrayParams& params) const;

  std::optional<CoeffSeries> lookup(const ArrayParams& params, int limit) const;

  /// Keeps the existing entry if it already covers a larger limit.
  void store(const ArrayParams& params, const CoeffSeries& series) const;

 private:
  std::optional<nlohmann::json> read_entry(const ArrayParams& params) const;

  std::filesystem::path dir_;
};

inline constexpr const char* kToolVersion = ODDW_VERSION;

}  // namespace oddw
