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

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "oddw/array_model.hpp"
#include "oddw/path_kernels.hpp"

namespace oddw {

/// One colored partition: a finitely supported map from cells to
/// frequencies. Cells are keyed by (row, value); zero entries are dropped.
class FrequencyArray {
 public:
  void set(Position cell, int frequency);
  int get(Position cell) const noexcept;

  /// The partitioned integer: sum of frequency * value.
  std::int64_t weight() const noexcept;
  int max_value() const noexcept;
  bool empty() const noexcept { return freq_.empty(); }

  const std::map<Position, int>& support() const noexcept { return freq_; }

 private:
  std::map<Position, int> freq_;
};

/// Dense frequency grid of the extended array (boundary diagonal prepended)
/// with room for paths to drift past the truncation. Row r of the grid is
/// row r + 1 of the array; column x holds value x - 2.
class PathGrid {
 public:
  PathGrid(const ArrayParams& params, int max_value);

  int rows() const noexcept { return rows_; }
  int width() const noexcept { return width_; }
  static constexpr int column(int value) noexcept { return value + 2; }

  void set(int row, int value, std::int32_t frequency) noexcept { at(row, value) = frequency; }
  std::int32_t get(int row, int value) const noexcept {
    return cells_[index(row, value)];
  }

  std::span<const std::int32_t> row_span(int row) const noexcept {
    return {cells_.data() + static_cast<std::size_t>((row - 1) * width_), static_cast<std::size_t>(width_)};
  }

  /// best[r][x] = heaviest path from (r, x) down to the bottom row.
  void best_down(const kernels::PathKernels& k, std::vector<std::int32_t>& out) const;
  /// best[r][x] = heaviest path from the top row down to (r, x).
  void best_up(const kernels::PathKernels& k, std::vector<std::int32_t>& out) const;

  /// Heaviest downward path in the whole extended array.
  std::int32_t max_path_sum(const kernels::PathKernels& k) const;

 private:
  std::size_t index(int row, int value) const noexcept {
    return static_cast<std::size_t>((row - 1) * width_ + column(value));
  }
  std::int32_t& at(int row, int value) noexcept { return cells_[index(row, value)]; }

  int rows_;
  int width_;
  std::vector<std::int32_t> cells_;
};

/// Maximum over all downward paths of the extended array of the sum of
/// frequencies along the path.
std::int64_t max_path_sum(const FrequencyArray& f, const ArrayParams& params);

/// True iff every downward path of the extended array sums to at most k.
bool is_admissible(const FrequencyArray& f, const ArrayParams& params);

}  // namespace oddw
