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

// Reference implementations used only by tests. None of them shares code
// with the library paths they check.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "oddw/admissibility.hpp"
#include "oddw/array_model.hpp"

namespace oddw::oracle {

inline bool position_exists(const ArrayParams& p, int row, int value, int max_value) {
  if (row < 1 || row > p.rows()) return false;
  const int base = p.row_holds_even(row) ? 0 : -1;
  return value >= base && value <= max_value && (value - base) % 2 == 0;
}

/// Calls visit(path) for every downward path of the extended array whose
/// entries have value <= max_value. path[i] is the value in row i + 1.
inline void for_each_path(const ArrayParams& p, int max_value, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> path;
  std::function<void(int)> extend = [&](int row) {
    if (row > p.rows()) {
      visit(path);
      return;
    }
    for (int dv : {-1, 1}) {
      const int v = path.back() + dv;
      if (!position_exists(p, row, v, max_value)) continue;
      path.push_back(v);
      extend(row + 1);
      path.pop_back();
    }
  };
  for (int v = -1; v <= max_value; ++v) {
    if (!position_exists(p, 1, v, max_value)) continue;
    path.assign(1, v);
    extend(2);
  }
}

/// Heaviest path by explicit enumeration of every path.
inline std::int64_t max_path_sum(const FrequencyArray& f, const ArrayParams& p) {
  const int max_value = f.max_value() + p.rows() + 1;
  std::int64_t best = -1;
  for_each_path(p, max_value, [&](const std::vector<int>& path) {
    std::int64_t s = 0;
    for (int i = 0; i < static_cast<int>(path.size()); ++i) {
      const int row = i + 1;
      const int v = path[static_cast<std::size_t>(i)];
      s += v <= 0 ? p.boundary_weight(row) : f.get({row, v});
    }
    best = std::max(best, s);
  });
  return best;
}

/// Multiplies by (1 - q^j)^e with |e| single-factor passes, in int64.
inline std::vector<std::int64_t> expand_naive(const std::vector<long long>& e1_to_eN, int limit) {
  std::vector<std::int64_t> g(static_cast<std::size_t>(limit) + 1, 0);
  g[0] = 1;
  for (int j = 1; j <= static_cast<int>(e1_to_eN.size()) && j <= limit; ++j) {
    const long long e = e1_to_eN[static_cast<std::size_t>(j - 1)];
    for (long long t = 0; t < (e > 0 ? e : -e); ++t) {
      if (e > 0) {
        // divide by (1 - q^j)
        for (int n = j; n <= limit; ++n) g[static_cast<std::size_t>(n)] += g[static_cast<std::size_t>(n - j)];
      } else {
        for (int n = limit; n >= j; --n) g[static_cast<std::size_t>(n)] -= g[static_cast<std::size_t>(n - j)];
      }
    }
  }
  return g;
}

/// Number of partitions of n into parts drawn (with repetition) from the
/// colored part list `parts`, by direct recursive enumeration.
inline std::int64_t count_partitions(const std::vector<int>& parts, int n, std::size_t from = 0) {
  if (n == 0) return 1;
  std::int64_t total = 0;
  for (std::size_t i = from; i < parts.size(); ++i) {
    if (parts[i] <= n) total += count_partitions(parts, n - parts[i], i);
  }
  return total;
}

/// Colored part list for `prod_{j = r mod M} (1 - q^j)^-1` over residues r.
inline std::vector<int> colored_parts(const std::vector<int>& residues, int modulus, int limit) {
  std::vector<int> parts;
  for (int r : residues) {
    for (int j = r; j <= limit; j += modulus) parts.push_back(j);
  }
  return parts;
}

inline std::vector<int> random_weights(std::mt19937& rng, int count, int max_level) {
  std::uniform_int_distribution<int> level_dist(1, max_level);
  std::uniform_int_distribution<int> slot(0, count - 1);
  std::vector<int> k(static_cast<std::size_t>(count), 0);
  const int level = level_dist(rng);
  for (int i = 0; i < level; ++i) ++k[static_cast<std::size_t>(slot(rng))];
  return k;
}

}  // namespace oddw::oracle
