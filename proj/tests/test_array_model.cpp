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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oddw/array_model.hpp"
#include "oracles.hpp"

using namespace oddw;

namespace {

std::vector<int> row_values(const ArrayShape& s, int row) {
  std::vector<int> out;
  for (const auto& c : s.cells()) {
    if (c.row == row) out.push_back(c.value);
  }
  return out;
}

std::uint64_t brute_paths_through(const ArrayParams& p, int max_value, Position target) {
  std::uint64_t n = 0;
  oracle::for_each_path(p, max_value, [&](const std::vector<int>& path) {
    if (path[static_cast<std::size_t>(target.row - 1)] == target.value) ++n;
  });
  return n;
}

}  // namespace

TEST_CASE("params derive rows, level and modulus") {
  const ArrayParams p(3, 0, {1, 0, 2, 0});
  CHECK(p.rows() == 5);
  CHECK(p.level() == 3);
  CHECK(p.modulus() == 12);
  CHECK(p.boundary() == std::vector<int>{1, 0, 0, 2, 0});
}

TEST_CASE("boundary interleave for several ell") {
  CHECK(ArrayParams(2, 0, {1, 2, 3}).boundary() == std::vector<int>{1, 2, 3});
  CHECK(ArrayParams(3, 0, {1, 2, 3, 4}).boundary() == std::vector<int>{1, 2, 0, 3, 4});
  CHECK(ArrayParams(4, 0, {1, 2, 3, 4, 5}).boundary() == std::vector<int>{1, 2, 0, 3, 0, 4, 5});
  CHECK(ArrayParams(5, 0, {1, 2, 3, 4, 5, 6}).boundary() == std::vector<int>{1, 2, 0, 3, 0, 4, 0, 5, 6});
  // w entries are taken as the boundary itself.
  CHECK(ArrayParams(3, 0, {0, 0, 1, 0, 0}).boundary() == std::vector<int>{0, 0, 1, 0, 0});
  // Sum of entries is the level.
  for (int ell = 2; ell <= 6; ++ell) {
    std::vector<int> k(static_cast<std::size_t>(ell) + 1);
    for (int i = 0; i <= ell; ++i) k[static_cast<std::size_t>(i)] = i + 1;
    const ArrayParams p(ell, 0, k);
    int s = 0;
    for (int b : p.boundary()) s += b;
    CHECK(s == p.level());
    CHECK(p.rows() % 2 == 1);
    CHECK(p.modulus() % 2 == 0);
  }
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(ArrayParams(1, 0, {1, 0}), ParamError);
  CHECK_THROWS_AS(ArrayParams(2, 0, {0, 0, 0}), ParamError);
  CHECK_THROWS_AS(ArrayParams(2, 0, {1, -1, 1}), ParamError);
  CHECK_THROWS_AS(ArrayParams(2, 0, {1, 0}), ParamError);
  CHECK_THROWS_AS(ArrayParams(3, 0, {1, 0, 0}), ParamError);
  CHECK_THROWS_AS(ArrayParams(2, 2, {1, 0, 0}), ParamError);
  CHECK_THROWS_WITH_AS(ArrayParams(2, 0, {0, 0, 0}), "level k must be positive", ParamError);
  CHECK_THROWS_AS(build_shape(ArrayParams(2, 0, {1, 0, 0}), 0), ParamError);
}

TEST_CASE("build_shape layout") {
  SUBCASE("ell 3 up to 8") {
    const auto s = build_shape(ArrayParams(3, 0, {1, 0, 0, 0}), 8);
    CHECK(s.rows() == 5);
    CHECK(row_values(s, 1) == std::vector<int>{2, 4, 6, 8});
    CHECK(row_values(s, 2) == std::vector<int>{1, 3, 5, 7});
    CHECK(row_values(s, 5) == std::vector<int>{2, 4, 6, 8});
    CHECK(s.cells().size() == 20);
  }
  SUBCASE("ell 2 up to 1") {
    const auto s = build_shape(ArrayParams(2, 0, {1, 0, 0}), 1);
    CHECK(s.rows() == 3);
    REQUIRE(s.cells().size() == 1);
    CHECK(s.cells()[0] == ColoredCell{2, 1, 1});
  }
  SUBCASE("cells ordered by value then row") {
    const auto s = build_shape(ArrayParams(4, 0, {1, 0, 0, 0, 0}), 9);
    CHECK(std::is_sorted(s.cells().begin(), s.cells().end(), [](const auto& a, const auto& b) {
      return a.value < b.value || (a.value == b.value && a.row < b.row);
    }));
  }
  SUBCASE("parity 1 swaps the rows") {
    const auto s = build_shape(ArrayParams(2, 1, {1, 0, 0}), 4);
    CHECK(row_values(s, 1) == std::vector<int>{1, 3});
    CHECK(row_values(s, 2) == std::vector<int>{2, 4});
  }
}

TEST_CASE("color labels") {
  const auto s = build_shape(ArrayParams(3, 0, {1, 0, 0, 0}), 8);
  CHECK(color_label(s.cell_at(3, 6)) == "6_2");
  CHECK(color_label(s.cell_at(2, 1)) == "1_1");
  CHECK(color_label(s.cell_at(5, 2)) == "2_3");
  CHECK(color_label(s.cell_at(4, 7)) == "7_2");
  CHECK_THROWS_AS(s.cell_at(1, 3), std::out_of_range);
}

TEST_CASE("neighbors") {
  const auto s = build_shape(ArrayParams(3, 0, {0, 0, 0, 1}), 10);
  CHECK(s.neighbors_below({1, 6}) == std::vector<Position>{{2, 5}, {2, 7}});
  // Top boundary entry (virtual value 0) touches 1_1 and the next boundary entry.
  CHECK(s.neighbors_below({1, 0}) == std::vector<Position>{{2, -1}, {2, 1}});
  CHECK(s.neighbors_below({5, 4}).empty());
  CHECK(s.neighbors_above({1, 4}).empty());
  // The worked path {k3, 1_1, 0, k1, k0} is a downward path.
  const std::vector<Position> path{{1, 0}, {2, 1}, {3, 0}, {4, -1}, {5, 0}};
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto nb = s.neighbors_below(path[i]);
    CHECK(std::find(nb.begin(), nb.end(), path[i + 1]) != nb.end());
  }
}

TEST_CASE("adjacency is symmetric and follows diagonals") {
  for (int ell : {2, 3, 4}) {
    const auto s = build_shape(ArrayParams(ell, 0, std::vector<int>(static_cast<std::size_t>(ell) + 1, 1)), 12);
    std::vector<Position> all = s.boundary_positions();
    for (const auto& c : s.cells()) all.push_back({c.row, c.value});
    for (const auto& a : all) {
      for (const auto& b : s.neighbors_below(a)) {
        CHECK(b.row == a.row + 1);
        CHECK(std::abs(b.value - a.value) == 1);
        const auto up = s.neighbors_above(b);
        CHECK(std::find(up.begin(), up.end(), a) != up.end());
      }
    }
  }
}

TEST_CASE("vertical flip is a shape automorphism") {
  for (int ell : {2, 3, 4}) {
    std::vector<int> k(static_cast<std::size_t>(ell) + 1);
    for (int i = 0; i <= ell; ++i) k[static_cast<std::size_t>(i)] = i;
    const ArrayParams p(ell, 0, k);
    const ArrayParams q = p.reversed();
    const auto sp = build_shape(p, 10);
    const auto sq = build_shape(q, 10);
    const int w = p.rows();
    for (int r = 1; r <= w; ++r) {
      CHECK(row_values(sp, r) == row_values(sq, w + 1 - r));
      CHECK(p.boundary_weight(r) == q.boundary_weight(w + 1 - r));
      CHECK(p.virtual_value(r) == q.virtual_value(w + 1 - r));
    }
    for (const auto& c : sp.cells()) {
      for (const auto& b : sp.neighbors_below({c.row, c.value})) {
        const auto up = sq.neighbors_above({w + 1 - c.row, c.value});
        CHECK(std::find(up.begin(), up.end(), Position{w + 1 - b.row, b.value}) != up.end());
      }
    }
  }
}

TEST_CASE("downward path counts") {
  const ArrayParams p5(3, 0, {1, 0, 0, 0});
  const auto s5 = build_shape(p5, 12);
  CHECK(s5.downward_paths_through({1, 6}) == 16);
  CHECK(brute_paths_through(p5, 12, {1, 6}) == 16);

  // Every unclipped cell lies on 2^(w-1) paths, wherever its row.
  CHECK(s5.downward_paths_through({2, 5}) == 16);
  CHECK(brute_paths_through(p5, 12, {2, 5}) == 16);

  const ArrayParams p3(2, 0, {1, 0, 0});
  const auto s3 = build_shape(p3, 10);
  for (int v : {4, 6, 8}) CHECK(s3.downward_paths_through({1, v}) == 4);

  // Near the boundary fewer paths exist; both counts must still agree.
  for (const auto& c : s5.cells()) {
    if (c.value > 7) continue;
    CHECK(s5.downward_paths_through({c.row, c.value}) == brute_paths_through(p5, 12, {c.row, c.value}));
  }

  CHECK_THROWS_AS(s5.downward_paths_through({1, 10}), ClippingError);
}
