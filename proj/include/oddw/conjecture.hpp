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

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "oddw/array_model.hpp"
#include "oddw/enumeration.hpp"
#include "oddw/golden.hpp"
#include "oddw/qseries.hpp"

namespace oddw {

struct ConjectureOptions {
  int min_periods = 2;
  /// Smallest accepted limit; defaults to one full period (N >= M).
  std::optional<int> min_limit;
  CountOptions count;
};

/// Outcome of count -> factor -> periodicity test for one parameter set.
struct ConjectureReport {
  explicit ConjectureReport(ArrayParams p) : params(std::move(p)) {}

  ArrayParams params;
  int limit = 0;
  CoeffSeries coefficients;
  ExponentSeq exponents;
  int modulus = 0;
  PeriodKind verdict = PeriodKind::Inconclusive;
  std::optional<ProductForm> pattern;
  std::optional<int> first_violation;
  int periods_checked = 0;
  std::chrono::duration<double> elapsed{};
  std::vector<std::string> warnings;
};

/// Factors an already counted series and tests it against M = 2*ell + 2*k.
/// A Periodic verdict is only issued after the periodic product has been
/// expanded back and compared with every coefficient.
ConjectureReport analyze_series(const ArrayParams& params, CoeffSeries coefficients,
                                const ConjectureOptions& options = {});

ConjectureReport run_conjecture(const ArrayParams& params, int limit, const ConjectureOptions& options = {});

/// `[k0, ..., kw] product: [pattern] mod M` for Periodic reports; a verdict
/// line naming the modulus and the first violation otherwise.
std::string report_line(const ConjectureReport& report);

/// Weight vectors (k_0..k_ell) summing to `level`, in descending
/// lexicographic order. With dedupe only the larger of each reversal pair
/// is kept.
std::vector<std::vector<int>> weight_compositions(int ell, int level, bool dedupe);

/// One report per composition of `level`; limit 0 means 2M.
std::vector<ConjectureReport> scan(int ell, int level, int limit, bool dedupe, int parity = 0,
                                   const ConjectureOptions& options = {}, unsigned report_threads = 1);

struct GoldenCheck {
  std::string expected;
  std::string actual;
  int limit = 0;
  PeriodKind verdict = PeriodKind::Inconclusive;
  bool pass = false;
  std::string detail;  // first differing index on failure
};

struct GoldenSummary {
  std::vector<GoldenCheck> products;
  GoldenCheck aperiodic;

  int products_passed() const;
  bool all_pass() const;
  std::string summary_line() const;
};

struct GoldenOptions {
  /// Per-entry limit is max(limit, 2M); unset means max(2M, 18).
  std::optional<int> limit;
  /// Fast mode: limit M + 4 per entry, pass on pattern agreement over all
  /// computed exponents even though fewer than two periods are covered.
  bool fast = false;
  ConjectureOptions conjecture;
};

GoldenSummary verify_golden(const std::vector<GoldenProduct>& products, const GoldenAperiodic& aperiodic,
                            const GoldenOptions& options = {});

/// Checks a single reference line.
GoldenCheck check_golden_product(const GoldenProduct& g, const GoldenOptions& options = {});
GoldenCheck check_golden_aperiodic(const GoldenAperiodic& r, const ConjectureOptions& options = {});

}  // namespace oddw
