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

#include "oddw/array_model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace oddw {

namespace {

std::vector<int> expand_boundary(int ell, const std::vector<int>& k) {
  const int w = 2 * ell - 1;
  if (static_cast<int>(k.size()) == w) return k;

  // [k_0, k_1, 0, k_2, 0, ..., 0, k_{ell-1}, k_ell], bottom to top.
  std::vector<int> b;
  b.reserve(static_cast<std::size_t>(w));
  b.push_back(k[0]);
  b.push_back(k[1]);
  for (int i = 2; i < ell; ++i) {
    b.push_back(0);
    b.push_back(k[static_cast<std::size_t>(i)]);
  }
  b.push_back(k[static_cast<std::size_t>(ell)]);
  return b;
}

}  // namespace

ArrayParams::ArrayParams(int ell, int parity, std::vector<int> k_weights)
    : ell_(ell), parity_(parity), k_weights_(std::move(k_weights)) {
  if (ell_ < 2) throw ParamError("ell must be at least 2");
  if (parity_ != 0 && parity_ != 1) throw ParamError("parity must be 0 or 1");
  const auto n = static_cast<int>(k_weights_.size());
  if (n != ell_ + 1 && n != 2 * ell_ - 1) {
    std::ostringstream os;
    os << "expected " << ell_ + 1 << " weights (k0..k" << ell_ << ")";
    if (ell_ > 2) os << " or " << 2 * ell_ - 1 << " boundary entries";
    os << ", got " << n;
    throw ParamError(os.str());
  }
  for (int kv : k_weights_) {
    if (kv < 0) throw ParamError("weights must be nonnegative");
  }
  level_ = std::accumulate(k_weights_.begin(), k_weights_.end(), 0);
  if (level_ <= 0) throw ParamError("level k must be positive");
  boundary_ = expand_boundary(ell_, k_weights_);
}

ArrayParams ArrayParams::reversed() const {
  std::vector<int> r(k_weights_.rbegin(), k_weights_.rend());
  return ArrayParams(ell_, parity_, std::move(r));
}

std::string format_vector(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  s += "]";
  return s;
}

std::string color_label(const ColoredCell& cell) {
  return std::to_string(cell.value) + "_" + std::to_string(cell.color);
}

ArrayShape::ArrayShape(ArrayParams params, int max_value)
    : params_(std::move(params)), max_value_(max_value) {
  if (max_value_ < 0) throw ParamError("max_value must be nonnegative");
  for (int v = 1; v <= max_value_; ++v) {
    for (int r = 1; r <= rows(); ++r) {
      if (params_.row_holds_even(r) == (v % 2 == 0)) cells_.push_back({r, v, color_of(r)});
    }
  }
}

std::vector<Position> ArrayShape::boundary_positions() const {
  std::vector<Position> out;
  for (int r = 1; r <= rows(); ++r) out.push_back({r, params_.virtual_value(r)});
  return out;
}

bool ArrayShape::is_boundary(Position p) const noexcept {
  return p.row >= 1 && p.row <= rows() && p.value == params_.virtual_value(p.row);
}

bool ArrayShape::contains(Position p) const noexcept {
  if (p.row < 1 || p.row > rows()) return false;
  if (is_boundary(p)) return true;
  return p.value >= 1 && p.value <= max_value_ && params_.row_holds_even(p.row) == (p.value % 2 == 0);
}

int ArrayShape::color_of(int row) const noexcept {
  const bool even = params_.row_holds_even(row);
  int c = 0;
  for (int r = 1; r <= row; ++r) c += params_.row_holds_even(r) == even ? 1 : 0;
  return c;
}

ColoredCell ArrayShape::cell_at(int row, int value) const {
  const Position p{row, value};
  if (value < 1 || !contains(p)) {
    throw std::out_of_range("no cell " + std::to_string(value) + " in row " + std::to_string(row));
  }
  return {row, value, color_of(row)};
}

std::vector<Position> ArrayShape::neighbors_below(Position p) const {
  std::vector<Position> out;
  if (p.row >= rows()) return out;
  for (int dv : {-1, 1}) {
    const Position q{p.row + 1, p.value + dv};
    if (contains(q)) out.push_back(q);
  }
  return out;
}

std::vector<Position> ArrayShape::neighbors_above(Position p) const {
  std::vector<Position> out;
  if (p.row <= 1) return out;
  for (int dv : {-1, 1}) {
    const Position q{p.row - 1, p.value + dv};
    if (contains(q)) out.push_back(q);
  }
  return out;
}

std::uint64_t ArrayShape::downward_paths_through(Position p) const {
  if (!contains(p)) throw std::out_of_range("position not in shape");
  const int reach = p.value + std::max(p.row - 1, rows() - p.row);
  if (reach > max_value_) {
    throw ClippingError("max_value " + std::to_string(max_value_) + " clips paths through " +
                        std::to_string(p.value) + " in row " + std::to_string(p.row));
  }

  // Count partial paths from p to the bottom row and from p to the top row.
  auto sweep = [&](bool downward) {
    std::map<Position, std::uint64_t> layer{{p, 1}};
    const int last = downward ? rows() : 1;
    for (int r = p.row; r != last; r += downward ? 1 : -1) {
      std::map<Position, std::uint64_t> next;
      for (const auto& [q, n] : layer) {
        for (Position s : downward ? neighbors_below(q) : neighbors_above(q)) next[s] += n;
      }
      layer = std::move(next);
    }
    std::uint64_t total = 0;
    for (const auto& entry : layer) total += entry.second;
    return total;
  };
  return sweep(true) * sweep(false);
}

ArrayShape build_shape(const ArrayParams& params, int max_value) {
  if (max_value < 1) throw ParamError("max_value must be at least 1");
  return ArrayShape(params, max_value);
}

}  // namespace oddw
