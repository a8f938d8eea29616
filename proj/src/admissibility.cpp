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

#include "oddw/admissibility.hpp"

#include <algorithm>
#include <limits>

namespace oddw {

void FrequencyArray::set(Position cell, int frequency) {
  if (frequency < 0) throw std::invalid_argument("frequencies must be nonnegative");
  if (cell.value < 1) throw std::invalid_argument("cells have positive values");
  if (frequency == 0) {
    freq_.erase(cell);
  } else {
    freq_[cell] = frequency;
  }
}

int FrequencyArray::get(Position cell) const noexcept {
  const auto it = freq_.find(cell);
  return it == freq_.end() ? 0 : it->second;
}

std::int64_t FrequencyArray::weight() const noexcept {
  std::int64_t n = 0;
  for (const auto& [cell, f] : freq_) n += static_cast<std::int64_t>(f) * cell.value;
  return n;
}

int FrequencyArray::max_value() const noexcept {
  int m = 0;
  for (const auto& entry : freq_) m = std::max(m, entry.first.value);
  return m;
}

PathGrid::PathGrid(const ArrayParams& params, int max_value)
    : rows_(params.rows()),
      width_(max_value + params.rows() + 4),
      cells_(static_cast<std::size_t>(rows_ * width_), kernels::kAbsent) {
  const int last_value = max_value + rows_;
  for (int r = 1; r <= rows_; ++r) {
    at(r, params.virtual_value(r)) = params.boundary_weight(r);
    for (int v = params.virtual_value(r) + 2; v <= last_value; v += 2) at(r, v) = 0;
  }
}

void PathGrid::best_down(const kernels::PathKernels& k, std::vector<std::int32_t>& out) const {
  out.resize(cells_.size());
  const auto w = static_cast<std::size_t>(width_);
  std::copy_n(cells_.end() - width_, width_, out.end() - width_);
  for (int r = rows_ - 1; r >= 1; --r) {
    const auto off = static_cast<std::size_t>(r - 1) * w;
    k.relax_row(row_span(r), {out.data() + off + w, w}, {out.data() + off, w});
  }
}

void PathGrid::best_up(const kernels::PathKernels& k, std::vector<std::int32_t>& out) const {
  out.resize(cells_.size());
  const auto w = static_cast<std::size_t>(width_);
  std::copy_n(cells_.begin(), width_, out.begin());
  for (int r = 2; r <= rows_; ++r) {
    const auto off = static_cast<std::size_t>(r - 1) * w;
    k.relax_row(row_span(r), {out.data() + off - w, w}, {out.data() + off, w});
  }
}

std::int32_t PathGrid::max_path_sum(const kernels::PathKernels& k) const {
  std::vector<std::int32_t> down;
  best_down(k, down);
  return k.row_max({down.data(), static_cast<std::size_t>(width_)});
}

std::int64_t max_path_sum(const FrequencyArray& f, const ArrayParams& params) {
  // A path holds one entry per row, so the int32 grid is safe as long as
  // each frequency times the row count fits comfortably.
  constexpr int kLimit = (1 << 28) / 64;
  PathGrid grid(params, std::max(1, f.max_value()));
  for (const auto& [cell, freq] : f.support()) {
    if (cell.row < 1 || cell.row > params.rows() ||
        params.row_holds_even(cell.row) != (cell.value % 2 == 0)) {
      throw std::invalid_argument("frequency assigned outside the array");
    }
    if (freq > kLimit) throw std::overflow_error("frequency too large for the path grid");
    grid.set(cell.row, cell.value, freq);
  }
  return grid.max_path_sum(kernels::active_kernels());
}

bool is_admissible(const FrequencyArray& f, const ArrayParams& params) {
  return max_path_sum(f, params) <= params.level();
}

}  // namespace oddw
