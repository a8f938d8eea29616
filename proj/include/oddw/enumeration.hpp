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

#include "oddw/array_model.hpp"
#include "oddw/qseries.hpp"

namespace oddw {

struct CountOptions {
  /// Worker threads for the search; 0 picks hardware concurrency. The result
  /// does not depend on this value.
  unsigned threads = 1;
};

/// a_n = number of admissible frequency arrays of weight n, for n <= limit.
///
/// Depth-first search over cells in (value, row) order. At every node the
/// frequency of the next cell is capped by the remaining weight budget and
/// by k minus the heaviest path already passing through that cell.
CoeffSeries count_admissible(const ArrayParams& params, int limit, const CountOptions& options = {});

inline constexpr int kDefaultOracleCeiling = 14;

/// Reference counter: enumerates every frequency array of weight <= limit
/// with no pruning and filters with is_admissible. Exponential; refuses
/// limits above `ceiling`.
CoeffSeries brute_force_count(const ArrayParams& params, int limit, int ceiling = kDefaultOracleCeiling);

}  // namespace oddw
