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

#include "oddw/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "oddw/admissibility.hpp"

namespace oddw {

namespace {

// Per-weight counters. Hot increments stay in machine words and spill into
// the arbitrary-precision totals long before they could wrap.
class Tally {
 public:
  explicit Tally(int limit)
      : small_(static_cast<std::size_t>(limit) + 1, 0), big_(static_cast<std::size_t>(limit) + 1, BigInt(0)) {}

  void add(int weight) {
    auto& slot = small_[static_cast<std::size_t>(weight)];
    if (++slot == kSpill) {
      big_[static_cast<std::size_t>(weight)] += slot;
      slot = 0;
    }
  }

  void merge_into(std::vector<BigInt>& out) const {
    for (std::size_t n = 0; n < out.size(); ++n) out[n] += big_[n] + small_[n];
  }

 private:
  static constexpr std::uint64_t kSpill = std::uint64_t{1} << 62;
  std::vector<std::uint64_t> small_;
  std::vector<BigInt> big_;
};

struct SearchCell {
  int row;
  int value;
  std::size_t grid_index;
};

class Search {
 public:
  Search(const ArrayParams& params, int limit, const kernels::PathKernels& k)
      : level_(params.level()), limit_(limit), kernels_(k), grid_(params, limit) {
    const ArrayShape shape(params, limit);
    for (const ColoredCell& c : shape.cells()) {
      cells_.push_back({c.row, c.value,
                        static_cast<std::size_t>((c.row - 1) * grid_.width() + PathGrid::column(c.value))});
    }
    down_.resize(static_cast<std::size_t>(limit) + 2);
    up_.resize(static_cast<std::size_t>(limit) + 2);
  }

  struct Choice {
    std::size_t cell;
    int frequency;
  };

  // Children of the root, in search order.
  std::vector<Choice> root_choices() {
    std::vector<Choice> out;
    for_each_choice(0, limit_, 0, [&](std::size_t ci, int f) { out.push_back({ci, f}); });
    return out;
  }

  void run_subtree(const Choice& c, Tally& tally) {
    const SearchCell& cell = cells_[c.cell];
    grid_.set(cell.row, cell.value, c.frequency);
    explore(c.cell + 1, limit_ - c.frequency * cell.value, 1, tally);
    grid_.set(cell.row, cell.value, 0);
  }

  void explore(std::size_t start, int budget, std::size_t depth, Tally& tally) {
    tally.add(limit_ - budget);
    for_each_choice(start, budget, depth, [&](std::size_t ci, int f) {
      const SearchCell& cell = cells_[ci];
      grid_.set(cell.row, cell.value, f);
      explore(ci + 1, budget - f * cell.value, depth + 1, tally);
      grid_.set(cell.row, cell.value, 0);
    });
  }

 private:
  // Calls visit(cell, f) for every cell at or after `start` and every
  // frequency f >= 1 that keeps the array admissible and within budget.
  template <typename Visit>
  void for_each_choice(std::size_t start, int budget, std::size_t depth, Visit&& visit) {
    if (start >= cells_.size() || cells_[start].value > budget) return;
    auto& down = down_[depth];
    auto& up = up_[depth];
    grid_.best_down(kernels_, down);
    grid_.best_up(kernels_, up);
    for (std::size_t ci = start; ci < cells_.size(); ++ci) {
      const SearchCell& cell = cells_[ci];
      if (cell.value > budget) break;
      // The cell is still 0, so this is the heaviest path through it as is.
      const int through = down[cell.grid_index] + up[cell.grid_index];
      const int cap = std::min(budget / cell.value, level_ - through);
      for (int f = 1; f <= cap; ++f) visit(ci, f);
    }
  }

  int level_;
  int limit_;
  const kernels::PathKernels& kernels_;
  PathGrid grid_;
  std::vector<SearchCell> cells_;
  std::vector<std::vector<std::int32_t>> down_;
  std::vector<std::vector<std::int32_t>> up_;
};

}  // namespace

CoeffSeries count_admissible(const ArrayParams& params, int limit, const CountOptions& options) {
  if (limit < 0) throw std::invalid_argument("limit must be nonnegative");
  const auto& k = kernels::active_kernels();
  std::vector<BigInt> totals(static_cast<std::size_t>(limit) + 1, BigInt(0));

  Search root(params, limit, k);
  const auto choices = root.root_choices();
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(choices.size())));

  Tally root_tally(limit);
  root_tally.add(0);
  root_tally.merge_into(totals);

  if (threads == 1) {
    Tally tally(limit);
    for (const auto& c : choices) root.run_subtree(c, tally);
    tally.merge_into(totals);
    return CoeffSeries{std::move(totals)};
  }

  std::atomic<std::size_t> next{0};
  std::vector<Tally> tallies(threads, Tally(limit));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        Search local(params, limit, k);
        for (std::size_t i = next++; i < choices.size(); i = next++) local.run_subtree(choices[i], tallies[t]);
      });
    }
  }
  for (const auto& t : tallies) t.merge_into(totals);
  return CoeffSeries{std::move(totals)};
}

namespace {

void enumerate_all(const ArrayParams& params, const std::vector<ColoredCell>& cells, std::size_t i, int budget,
                   int limit, FrequencyArray& f, std::vector<BigInt>& out) {
  if (i == cells.size() || cells[i].value > budget) {
    if (is_admissible(f, params)) out[static_cast<std::size_t>(limit - budget)] += 1;
    return;
  }
  const Position p{cells[i].row, cells[i].value};
  for (int m = 0; m * p.value <= budget; ++m) {
    f.set(p, m);
    enumerate_all(params, cells, i + 1, budget - m * p.value, limit, f, out);
  }
  f.set(p, 0);
}

}  // namespace

CoeffSeries brute_force_count(const ArrayParams& params, int limit, int ceiling) {
  if (limit < 0) throw std::invalid_argument("limit must be nonnegative");
  if (limit > ceiling) {
    throw std::invalid_argument("brute-force limit " + std::to_string(limit) + " exceeds ceiling " +
                                std::to_string(ceiling));
  }
  std::vector<BigInt> out(static_cast<std::size_t>(limit) + 1, BigInt(0));
  if (limit == 0) {
    out[0] = 1;
    return CoeffSeries{std::move(out)};
  }
  const ArrayShape shape(params, limit);
  FrequencyArray f;
  enumerate_all(params, shape.cells(), 0, limit, limit, f, out);
  return CoeffSeries{std::move(out)};
}

}  // namespace oddw
