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

#include "oddw/conjecture.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace oddw {

namespace {

std::string exponent_text(const BigInt& v) { return v.str(); }

// First j in 1..N where the computed exponents leave the expected ones.
std::optional<int> first_difference(const ExponentSeq& got, const ExponentSeq& want) {
  const int n = std::min(got.limit(), want.limit());
  for (int j = 1; j <= n; ++j) {
    if (got[static_cast<std::size_t>(j)] != want[static_cast<std::size_t>(j)]) return j;
  }
  return std::nullopt;
}

}  // namespace

ConjectureReport analyze_series(const ArrayParams& params, CoeffSeries coefficients,
                                const ConjectureOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ConjectureReport r(params);
  r.limit = coefficients.limit();
  r.modulus = params.modulus();
  r.coefficients = std::move(coefficients);
  r.exponents = euler_exponents(r.coefficients);

  const PeriodVerdict v = detect_period(r.exponents, r.modulus, options.min_periods);
  r.verdict = v.kind;
  r.pattern = v.pattern;
  r.first_violation = v.first_violation;
  r.periods_checked = v.periods_checked;

  if (r.verdict == PeriodKind::Periodic) {
    // Closed loop: the periodic product alone must reproduce the counts.
    if (expand_product(*r.pattern, r.limit) != r.coefficients) {
      throw std::logic_error("periodic pattern does not reproduce the counted series");
    }
  }
  if (r.limit < 2 * r.modulus) {
    r.warnings.push_back("limit " + std::to_string(r.limit) + " is below 2M = " + std::to_string(2 * r.modulus) +
                         "; periodicity evidence is weak");
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

ConjectureReport run_conjecture(const ArrayParams& params, int limit, const ConjectureOptions& options) {
  const int floor = options.min_limit.value_or(params.modulus());
  if (limit < floor) {
    throw std::invalid_argument("limit " + std::to_string(limit) + " is below the minimum " + std::to_string(floor) +
                                " for modulus " + std::to_string(params.modulus()));
  }
  const auto start = std::chrono::steady_clock::now();
  ConjectureReport r = analyze_series(params, count_admissible(params, limit, options.count), options);
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

std::string report_line(const ConjectureReport& r) {
  const std::string head = format_vector(r.params.boundary());
  const std::string mod = std::to_string(r.modulus);
  switch (r.verdict) {
    case PeriodKind::Periodic:
      return head + " product: " + r.pattern->to_string();
    case PeriodKind::Aperiodic: {
      const int j = *r.first_violation;
      const int i = j - r.modulus;
      return head + " aperiodic: mod " + mod + " fails at j = " + std::to_string(j) + " (e_" + std::to_string(i) +
             " = " + exponent_text(r.exponents[static_cast<std::size_t>(i)]) + ", e_" + std::to_string(j) + " = " +
             exponent_text(r.exponents[static_cast<std::size_t>(j)]) + "), N = " + std::to_string(r.limit);
    }
    case PeriodKind::Inconclusive:
      break;
  }
  std::string s = head + " inconclusive: mod " + mod + ", no violation up to N = " + std::to_string(r.limit) + " (" +
                  std::to_string(r.periods_checked) + " full period(s) checked)";
  if (r.pattern) s += ", candidate " + r.pattern->to_string();
  return s;
}

std::vector<std::vector<int>> weight_compositions(int ell, int level, bool dedupe) {
  if (ell < 2) throw ParamError("ell must be at least 2");
  if (level < 1) throw ParamError("level k must be positive");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(ell) + 1, 0);

  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == cur.size()) {
      cur[i] = left;
      if (!dedupe || !std::lexicographical_compare(cur.begin(), cur.end(), cur.rbegin(), cur.rend())) {
        out.push_back(cur);
      }
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, level);
  return out;
}

std::vector<ConjectureReport> scan(int ell, int level, int limit, bool dedupe, int parity,
                                   const ConjectureOptions& options, unsigned report_threads) {
  std::vector<ArrayParams> all;
  for (auto& k : weight_compositions(ell, level, dedupe)) all.emplace_back(ell, parity, std::move(k));
  const int n = limit > 0 ? limit : 2 * all.front().modulus();

  std::vector<std::optional<ConjectureReport>> slots(all.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < all.size(); i = next++) slots[i] = run_conjecture(all[i], n, options);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(report_threads, static_cast<unsigned>(all.size())));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  std::vector<ConjectureReport> out;
  out.reserve(all.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

int GoldenSummary::products_passed() const {
  return static_cast<int>(std::count_if(products.begin(), products.end(), [](const auto& c) { return c.pass; }));
}

bool GoldenSummary::all_pass() const {
  return aperiodic.pass && products_passed() == static_cast<int>(products.size());
}

std::string GoldenSummary::summary_line() const {
  return std::to_string(products_passed()) + "/" + std::to_string(products.size()) +
         " products + Remark exponents: " + (all_pass() ? "PASS" : "FAIL");
}

GoldenCheck check_golden_product(const GoldenProduct& g, const GoldenOptions& options) {
  const ArrayParams params(g.ell(), 0, g.weights);
  const int m = params.modulus();
  GoldenCheck c;
  c.expected = g.line;
  if (m != g.form.modulus()) {
    c.detail = "modulus " + std::to_string(g.form.modulus()) + " differs from 2*ell + 2*k = " + std::to_string(m);
    return c;
  }

  ConjectureOptions copts = options.conjecture;
  if (options.fast) {
    c.limit = m + 4;
    copts.min_limit = std::min(copts.min_limit.value_or(m), c.limit);
  } else {
    c.limit = std::max(options.limit.value_or(std::max(2 * m, 18)), 2 * m);
  }

  const ConjectureReport r = run_conjecture(params, c.limit, copts);
  c.verdict = r.verdict;
  c.actual = report_line(r);
  if (const auto j = first_difference(r.exponents, g.form.exponents(r.limit))) {
    c.detail = "first differing exponent at j = " + std::to_string(*j) + ": got " +
               r.exponents[static_cast<std::size_t>(*j)].str() + ", expected " +
               std::to_string(g.form.exponent_of((*j - 1) % m + 1));
    return c;
  }
  const bool pattern_ok = r.pattern && *r.pattern == g.form && r.pattern->to_string() == g.line.substr(g.line.find("product: ") + 9);
  if (!pattern_ok) {
    c.detail = "pattern text differs";
    return c;
  }
  if (options.fast) {
    c.pass = r.verdict != PeriodKind::Aperiodic;
  } else {
    c.pass = r.verdict == PeriodKind::Periodic && c.actual == g.line;
    if (!c.pass) c.detail = std::string("verdict ") + std::string(to_string(r.verdict));
  }
  return c;
}

GoldenCheck check_golden_aperiodic(const GoldenAperiodic& rem, const ConjectureOptions& options) {
  const ArrayParams params((static_cast<int>(rem.weights.size()) + 1) / 2, rem.parity, rem.weights);
  GoldenCheck c;
  c.limit = rem.limit;
  c.expected = format_vector(rem.weights) + " exponents e_1..e_" + std::to_string(rem.limit) + ", aperiodic mod " +
               std::to_string(params.modulus());
  const ConjectureReport r = run_conjecture(params, rem.limit, options);
  c.verdict = r.verdict;
  c.actual = report_line(r);
  if (const auto j = first_difference(r.exponents, rem.exponents)) {
    c.detail = "first differing exponent at j = " + std::to_string(*j) + ": got " +
               r.exponents[static_cast<std::size_t>(*j)].str() + ", expected " +
               rem.exponents[static_cast<std::size_t>(*j)].str();
    return c;
  }
  if (r.exponents.limit() != rem.exponents.limit()) {
    c.detail = "exponent count differs";
    return c;
  }
  c.pass = r.verdict == PeriodKind::Aperiodic;
  if (!c.pass) c.detail = std::string("verdict ") + std::string(to_string(r.verdict)) + ", expected Aperiodic";
  return c;
}

GoldenSummary verify_golden(const std::vector<GoldenProduct>& products, const GoldenAperiodic& aperiodic,
                            const GoldenOptions& options) {
  GoldenSummary s;
  for (const auto& g : products) s.products.push_back(check_golden_product(g, options));
  s.aperiodic = check_golden_aperiodic(aperiodic, options.conjecture);
  return s;
}

}  // namespace oddw
