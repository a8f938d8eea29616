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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace oddw {

/// Raised for parameter sets that do not describe a valid array.
class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a truncated shape is too narrow for the requested query.
class ClippingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One problem instance: the array with w = 2*ell - 1 rows, the parity of
/// the top row and the boundary weights.
///
/// Weights are accepted in two forms. With ell + 1 entries they are
/// (k_0, ..., k_ell) and expand to the boundary diagonal
/// [k_0, k_1, 0, k_2, 0, ..., 0, k_{ell-1}, k_ell] read bottom to top.
/// With w entries they are the boundary diagonal itself, bottom to top,
/// and may carry weight on the interleaved slots. For ell = 2 both forms
/// coincide.
class ArrayParams {
 public:
  ArrayParams(int ell, int parity, std::vector<int> k_weights);

  int ell() const noexcept { return ell_; }
  int parity() const noexcept { return parity_; }
  int rows() const noexcept { return 2 * ell_ - 1; }
  int level() const noexcept { return level_; }
  int modulus() const noexcept { return 2 * ell_ + 2 * level_; }

  const std::vector<int>& k_weights() const noexcept { return k_weights_; }

  /// Boundary entries bottom to top, w of them.
  const std::vector<int>& boundary() const noexcept { return boundary_; }

  /// Boundary weight sitting at the left end of `row` (1 = top).
  int boundary_weight(int row) const { return boundary_.at(static_cast<std::size_t>(rows() - row)); }

  /// True when `row` holds even values.
  bool row_holds_even(int row) const noexcept { return ((row % 2) == 1) == (parity_ == 0); }

  /// Value of the boundary entry in `row`: 0 on even rows, -1 on odd rows.
  int virtual_value(int row) const noexcept { return row_holds_even(row) ? 0 : -1; }

  /// Same array with the weight vector reversed (the vertical flip).
  ArrayParams reversed() const;

  bool operator==(const ArrayParams&) const = default;

 private:
  int ell_;
  int parity_;
  std::vector<int> k_weights_;
  std::vector<int> boundary_;
  int level_ = 0;
};

/// Comma-separated rendering `[a, b, c]`, the form used in product lines.
std::string format_vector(const std::vector<int>& v);

struct ColoredCell {
  int row = 0;
  int value = 0;
  int color = 0;

  bool operator==(const ColoredCell&) const = default;
};

/// A grid position in the extended array. Values <= 0 denote the boundary
/// entry of the row (its virtual value).
struct Position {
  int row = 0;
  int value = 0;

  bool operator==(const Position&) const = default;
  auto operator<=>(const Position&) const = default;
};

/// Text label such as "6_2".
std::string color_label(const ColoredCell& cell);

/// The truncated array: every cell with value <= max_value plus the
/// boundary diagonal. Immutable after construction.
class ArrayShape {
 public:
  ArrayShape(ArrayParams params, int max_value);

  const ArrayParams& params() const noexcept { return params_; }
  int rows() const noexcept { return params_.rows(); }
  int max_value() const noexcept { return max_value_; }

  /// Cells ordered by value, then row top to bottom.
  const std::vector<ColoredCell>& cells() const noexcept { return cells_; }

  /// Boundary positions, top to bottom.
  std::vector<Position> boundary_positions() const;

  bool contains(Position p) const noexcept;
  bool is_boundary(Position p) const noexcept;

  /// Cell at (row, value); throws std::out_of_range if it is not in the shape.
  ColoredCell cell_at(int row, int value) const;

  /// Color of a value in a given row: number of rows of the same value
  /// parity at or above it.
  int color_of(int row) const noexcept;

  std::vector<Position> neighbors_below(Position p) const;
  std::vector<Position> neighbors_above(Position p) const;

  /// Number of downward paths in the shape containing `p`. Throws
  /// ClippingError when some path through `p` would leave the truncation.
  std::uint64_t downward_paths_through(Position p) const;

 private:
  ArrayParams params_;
  int max_value_;
  std::vector<ColoredCell> cells_;
};

/// Convenience wrapper.
ArrayShape build_shape(const ArrayParams& params, int max_value);

}  // namespace oddw
