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

#include <random>

#include "oddw/admissibility.hpp"
#include "oracles.hpp"

using namespace oddw;

namespace {

FrequencyArray random_array(std::mt19937& rng, const ArrayParams& p, int max_value, int max_freq) {
  FrequencyArray f;
  std::uniform_int_distribution<int> freq(0, max_freq);
  std::uniform_int_distribution<int> keep(0, 2);
  const auto shape = build_shape(p, max_value);
  for (const auto& c : shape.cells()) {
    if (keep(rng) == 0) f.set({c.row, c.value}, freq(rng));
  }
  return f;
}

}  // namespace

TEST_CASE("frequency array basics") {
  FrequencyArray f;
  CHECK(f.empty());
  f.set({2, 1}, 3);
  f.set({1, 4}, 2);
  CHECK(f.weight() == 3 * 1 + 2 * 4);
  CHECK(f.get({2, 1}) == 3);
  CHECK(f.get({2, 3}) == 0);
  f.set({2, 1}, 0);
  CHECK(f.support().size() == 1);
  CHECK_THROWS_AS(f.set({1, 2}, -1), std::invalid_argument);
  CHECK_THROWS_AS(f.set({1, 0}, 1), std::invalid_argument);
}

TEST_CASE("max_path_sum examples") {
  SUBCASE("empty array gives the level") {
    for (const auto& k : std::vector<std::vector<int>>{{1, 0, 0}, {2, 1, 3}, {0, 0, 1}}) {
      const ArrayParams p(2, 0, k);
      CHECK(max_path_sum(FrequencyArray{}, p) == p.level());
    }
    const ArrayParams p(3, 0, {0, 0, 1, 0, 0});
    CHECK(max_path_sum(FrequencyArray{}, p) == 1);
  }
  SUBCASE("ell 2, (1,0,0), one 1_1") {
    const ArrayParams p(2, 0, {1, 0, 0});
    FrequencyArray f;
    f.set({2, 1}, 1);
    CHECK(oracle::max_path_sum(f, p) == 2);
    CHECK(max_path_sum(f, p) == 2);
    CHECK_FALSE(is_admissible(f, p));
  }
  SUBCASE("ell 2, (0,1,0), one 1_1") {
    const ArrayParams p(2, 0, {0, 1, 0});
    FrequencyArray f;
    f.set({2, 1}, 1);
    CHECK(oracle::max_path_sum(f, p) == 1);
    CHECK(max_path_sum(f, p) == 1);
    CHECK(is_admissible(f, p));
  }
  SUBCASE("ell 3, path {k3, 1_1, 0, k1, k0}") {
    const ArrayParams p(3, 0, {2, 1, 3, 1});
    FrequencyArray f;
    f.set({2, 1}, 4);
    // k0 + k1 + f + k3 beats the all-boundary path.
    CHECK(max_path_sum(f, p) == std::max<std::int64_t>(p.level(), 2 + 1 + 4 + 1));
    CHECK(oracle::max_path_sum(f, p) == max_path_sum(f, p));
  }
}

TEST_CASE("empty array is always admissible") {
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    const int ell = 2 + i % 3;
    const ArrayParams p(ell, 0, oracle::random_weights(rng, ell + 1, 4));
    CHECK(is_admissible(FrequencyArray{}, p));
  }
}

TEST_CASE("frequency of 1_1 is bounded by k2 when ell = 3") {
  for (int k2 = 0; k2 <= 3; ++k2) {
    const ArrayParams p(3, 0, {1, 1, k2, 1});
    int best = -1;
    for (int f = 0; f <= 6; ++f) {
      FrequencyArray a;
      a.set({2, 1}, f);
      if (is_admissible(a, p)) best = f;
    }
    CHECK(best == k2);
  }
}

TEST_CASE("dynamic program agrees with explicit path enumeration") {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 300; ++rep) {
    const int ell = 2 + rep % 2;
    const int w = 2 * ell - 1;
    const bool raw = ell == 3 && rep % 4 == 1;
    const ArrayParams p(ell, rep % 7 == 0 ? 1 : 0, oracle::random_weights(rng, raw ? w : ell + 1, 3));
    const auto f = random_array(rng, p, 6, 3);
    CAPTURE(rep);
    const auto expect = oracle::max_path_sum(f, p);
    CHECK(max_path_sum(f, p) == expect);
    CHECK(is_admissible(f, p) == (expect <= p.level()));
  }
}

TEST_CASE("admissibility is monotone in frequencies") {
  std::mt19937 rng(5);
  int checked = 0;
  for (int rep = 0; rep < 400; ++rep) {
    const ArrayParams p(3, 0, oracle::random_weights(rng, 4, 3));
    const auto g = random_array(rng, p, 8, 1);
    if (!is_admissible(g, p)) continue;
    FrequencyArray f;
    std::uniform_int_distribution<int> coin(0, 1);
    for (const auto& [cell, v] : g.support()) f.set(cell, coin(rng) ? v : 0);
    CHECK(is_admissible(f, p));
    CHECK(max_path_sum(f, p) <= max_path_sum(g, p));
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("frequencies outside the array are rejected") {
  const ArrayParams p(2, 0, {1, 0, 0});
  FrequencyArray f;
  f.set({1, 3}, 1);  // row 1 holds even values
  CHECK_THROWS_AS(max_path_sum(f, p), std::invalid_argument);
  FrequencyArray g;
  g.set({4, 2}, 1);
  CHECK_THROWS_AS(max_path_sum(g, p), std::invalid_argument);
}
