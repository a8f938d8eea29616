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

#include "oddw/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "oddw/conjecture.hpp"
#include "oddw/golden.hpp"
#include "oddw/report_io.hpp"

namespace oddw::cli {

namespace {

struct CommonFlags {
  int ell = 0;
  int parity = 0;
  std::vector<int> k;
  int limit = -1;
  std::string format = "text";
  std::string cache_dir;
  unsigned threads = 1;
};

void add_instance_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--ell", f.ell, "ell >= 2; the array has 2*ell - 1 rows")->required();
  cmd->add_option("--parity", f.parity, "0: even top row; 1: odd top row (experimental)")
      ->check(CLI::IsMember({0, 1}));
  cmd->add_option("--k", f.k, "weights k0,...,k_ell or the full boundary diagonal (bottom to top)")
      ->delimiter(',')
      ->required();
}

void add_output_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--format", f.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--cache-dir", f.cache_dir, std::string("series cache directory (default $") + kCacheDirEnv + ")");
  cmd->add_option("--threads", f.threads, "search threads, 0 = all cores");
}

std::unique_ptr<SeriesCache> open_cache(const CommonFlags& f) {
  std::string dir = f.cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv(kCacheDirEnv)) dir = env;
  }
  if (dir.empty()) return nullptr;
  return std::make_unique<SeriesCache>(dir);
}

CoeffSeries obtain_series(const ArrayParams& params, int limit, const CommonFlags& f) {
  const auto cache = open_cache(f);
  if (cache) {
    if (auto hit = cache->lookup(params, limit)) return std::move(*hit);
  }
  CoeffSeries s = count_admissible(params, limit, CountOptions{f.threads});
  if (cache) cache->store(params, s);
  return s;
}

int cmd_count(const CommonFlags& f, std::ostream& out) {
  const ArrayParams params(f.ell, f.parity, f.k);
  if (f.limit < 0) throw CLI::ValidationError("--limit", "a nonnegative limit is required");
  const CoeffSeries s = obtain_series(params, f.limit, f);
  if (f.format == "json") {
    nlohmann::ordered_json j;
    j["params"] = params_json(params);
    j["N"] = s.limit();
    j["coefficients"] = series_json(s);
    out << j.dump(2) << '\n';
  } else {
    for (int n = 0; n <= s.limit(); ++n) out << n << ": " << s[static_cast<std::size_t>(n)] << '\n';
  }
  return kSuccess;
}

ConjectureReport conjecture_for(const ArrayParams& params, int limit, const ConjectureOptions& opts,
                                const CommonFlags& f) {
  const int floor = opts.min_limit.value_or(params.modulus());
  if (limit < floor) {
    throw std::invalid_argument("limit " + std::to_string(limit) + " is below the minimum " + std::to_string(floor) +
                                " for modulus " + std::to_string(params.modulus()));
  }
  const auto start = std::chrono::steady_clock::now();
  ConjectureReport r = analyze_series(params, obtain_series(params, limit, f), opts);
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

int cmd_conjecture(const CommonFlags& f, int min_periods, bool strict, std::ostream& out, std::ostream& err) {
  const ArrayParams params(f.ell, f.parity, f.k);
  ConjectureOptions opts;
  opts.min_periods = min_periods;
  const int limit = f.limit >= 0 ? f.limit : 2 * params.modulus();
  const ConjectureReport r = conjecture_for(params, limit, opts, f);
  for (const auto& w : r.warnings) err << "warning: " << w << '\n';
  if (f.format == "json") {
    out << report_json(r).dump(2) << '\n';
  } else {
    out << report_line(r) << '\n';
  }
  return strict && r.verdict == PeriodKind::Inconclusive ? kInconclusiveStrict : kSuccess;
}

int cmd_scan(const CommonFlags& f, int level, bool dedupe, int min_periods, bool strict, std::ostream& out,
             std::ostream& err) {
  ConjectureOptions opts;
  opts.min_periods = min_periods;
  std::vector<ConjectureReport> reports;
  for (auto& k : weight_compositions(f.ell, level, dedupe)) {
    const ArrayParams params(f.ell, f.parity, std::move(k));
    const int limit = f.limit >= 0 ? f.limit : 2 * params.modulus();
    reports.push_back(conjecture_for(params, limit, opts, f));
  }
  bool inconclusive = false;
  auto all = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    for (const auto& w : r.warnings) err << "warning: " << format_vector(r.params.boundary()) << ": " << w << '\n';
    inconclusive = inconclusive || r.verdict == PeriodKind::Inconclusive;
    if (f.format == "json") {
      all.push_back(report_json(r));
    } else {
      out << report_line(r) << '\n';
    }
  }
  if (f.format == "json") out << all.dump(2) << '\n';
  return strict && inconclusive ? kInconclusiveStrict : kSuccess;
}

int cmd_verify(int limit, bool fast, unsigned threads, std::ostream& out) {
  GoldenOptions opts;
  if (limit >= 0) opts.limit = limit;
  opts.fast = fast;
  opts.conjecture.count.threads = threads;
  const auto products = parse_golden_products(embedded_golden_products());
  const auto aperiodic = parse_golden_aperiodic(embedded_golden_aperiodic());

  GoldenSummary s;
  for (const auto& g : products) {
    s.products.push_back(check_golden_product(g, opts));
    const GoldenCheck& c = s.products.back();
    out << (c.pass ? "PASS " : "FAIL ") << c.expected << "  (N = " << c.limit << ")\n";
    if (!c.pass) out << "  got:  " << c.actual << "\n  diff: " << c.detail << '\n';
  }
  s.aperiodic = check_golden_aperiodic(aperiodic, opts.conjecture);
  out << (s.aperiodic.pass ? "PASS " : "FAIL ") << s.aperiodic.expected << "  (N = " << s.aperiodic.limit << ")\n";
  if (!s.aperiodic.pass) out << "  got:  " << s.aperiodic.actual << "\n  diff: " << s.aperiodic.detail << '\n';
  out << s.summary_line() << '\n';
  return s.all_pass() ? kSuccess : kGoldenMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts admissible colored partitions on odd-width arrays and tests periodic product formulas"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  CommonFlags f;
  int min_periods = 2;
  bool strict = false;
  int level = 0;
  bool dedupe = false;
  bool fast = false;

  auto* count = app.add_subcommand("count", "print a_n for n <= limit");
  add_instance_flags(count, f);
  count->add_option("--limit", f.limit, "largest n")->required()->check(CLI::NonNegativeNumber);
  add_output_flags(count, f);

  auto* conj = app.add_subcommand("conjecture", "factor the series and test periodicity mod 2*ell + 2*k");
  add_instance_flags(conj, f);
  conj->add_option("--limit", f.limit, "largest n (default 2M)")->check(CLI::NonNegativeNumber);
  conj->add_option("--min-periods", min_periods, "full periods required for a periodic verdict")
      ->check(CLI::PositiveNumber);
  conj->add_flag("--strict", strict, "exit 3 on an inconclusive verdict");
  add_output_flags(conj, f);

  auto* sc = app.add_subcommand("scan", "run the conjecture for every weight vector of a level");
  sc->add_option("--ell", f.ell, "ell >= 2")->required();
  sc->add_option("--level", level, "k = k0 + ... + k_ell")->required()->check(CLI::PositiveNumber);
  sc->add_option("--parity", f.parity, "0 or 1 (experimental)")->check(CLI::IsMember({0, 1}));
  sc->add_option("--limit", f.limit, "largest n (default 2M)")->check(CLI::NonNegativeNumber);
  sc->add_flag("--dedupe", dedupe, "one representative per reversal pair");
  sc->add_option("--min-periods", min_periods, "full periods required for a periodic verdict")
      ->check(CLI::PositiveNumber);
  sc->add_flag("--strict", strict, "exit 3 if any verdict is inconclusive");
  add_output_flags(sc, f);

  auto* ver = app.add_subcommand("verify", "recompute the reference product list and exponent list");
  ver->add_option("--limit", f.limit, "per-entry limit, raised to 2M where smaller (default max(2M, 18))")
      ->check(CLI::NonNegativeNumber);
  ver->add_flag("--fast", fast, "limit M + 4 per entry; checks the pattern on all computed exponents");
  ver->add_option("--threads", f.threads, "search threads, 0 = all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*count) return cmd_count(f, out);
    if (*conj) return cmd_conjecture(f, min_periods, strict, out, err);
    if (*sc) return cmd_scan(f, level, dedupe, min_periods, strict, out, err);
    if (*ver) return cmd_verify(f.limit, fast, f.threads, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace oddw::cli
