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

#include "oddw/qseries.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace oddw {

namespace {

// Patterns are expanded into explicit residue lists; anything larger than
// this is not a product the tool can print.
constexpr long long kMaxMultiplicity = 1 << 20;

}  // namespace

CoeffSeries CoeffSeries::truncated(int n) const {
  if (n > limit()) throw std::out_of_range("series too short to truncate");
  return CoeffSeries{{coeffs.begin(), coeffs.begin() + n + 1}};
}

ExponentSeq ExponentSeq::from_values(const std::vector<long long>& e1_to_eN) {
  ExponentSeq s;
  for (long long v : e1_to_eN) s.e.emplace_back(v);
  return s;
}

void multiply_by_euler_factor(std::vector<BigInt>& g, int j, const BigInt& e) {
  if (j < 1) throw std::invalid_argument("factor index must be positive");
  if (e == 0) return;
  const int n = static_cast<int>(g.size()) - 1;
  if (j > n) return;

  // (1 - q^j)^e = sum_m (-1)^m C(e, m) q^(jm), with C(e, m) the generalized
  // binomial coefficient: c_m = -c_{m-1} (e - m + 1) / m, always exact.
  std::vector<BigInt> c{BigInt(1)};
  for (int m = 1; m * j <= n; ++m) {
    BigInt next = -c.back() * (e - (m - 1));
    next /= m;
    if (next == 0 && e >= 0) break;
    c.push_back(std::move(next));
  }

  for (int t = n; t >= 1; --t) {
    BigInt acc = g[static_cast<std::size_t>(t)];
    for (int m = 1; m < static_cast<int>(c.size()) && m * j <= t; ++m) {
      acc += c[static_cast<std::size_t>(m)] * g[static_cast<std::size_t>(t - m * j)];
    }
    g[static_cast<std::size_t>(t)] = std::move(acc);
  }
}

EulerFactorizer::EulerFactorizer(const CoeffSeries& series) : g_(series.coeffs) {
  if (g_.empty() || g_[0] != 1) throw std::invalid_argument("constant term must be 1");
}

void EulerFactorizer::step() {
  if (done()) return;
  const BigInt ej = g_[static_cast<std::size_t>(next_)];
  multiply_by_euler_factor(g_, next_, ej);
  e_.e.push_back(ej);
  ++next_;
}

ExponentSeq euler_exponents(const CoeffSeries& series) {
  EulerFactorizer f(series);
  while (!f.done()) f.step();
  return f.exponents();
}

ProductForm::ProductForm(int modulus, std::vector<int> residues)
    : modulus_(modulus), residues_(std::move(residues)) {
  if (modulus_ < 1) throw std::invalid_argument("modulus must be positive");
  for (int r : residues_) {
    if (r == 0 || std::abs(r) > modulus_) throw std::invalid_argument("residue out of range 1..M");
  }
  std::stable_sort(residues_.begin(), residues_.end(),
                   [](int a, int b) { return std::abs(a) < std::abs(b) || (std::abs(a) == std::abs(b) && a < b); });
}

ProductForm ProductForm::from_period(const ExponentSeq& e, int modulus) {
  if (e.limit() < modulus) throw std::invalid_argument("need a full period of exponents");
  std::vector<int> residues;
  for (int r = 1; r <= modulus; ++r) {
    const BigInt& v = e[static_cast<std::size_t>(r)];
    if (abs(v) > kMaxMultiplicity) throw std::overflow_error("exponent too large for a product pattern");
    const auto n = v.convert_to<long long>();
    for (long long i = 0; i < std::abs(n); ++i) residues.push_back(n > 0 ? r : -r);
  }
  return ProductForm(modulus, std::move(residues));
}

ProductForm ProductForm::parse(std::string_view text) {
  auto fail = [&] { return std::invalid_argument("malformed product pattern: " + std::string(text)); };
  const auto open = text.find('[');
  const auto close = text.find(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) throw fail();

  std::vector<int> residues;
  std::string_view body = text.substr(open + 1, close - open - 1);
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) {
      if (comma == std::string_view::npos && residues.empty()) break;
      throw fail();
    }
    int r = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), r);
    if (ec != std::errc{} || ptr != item.data() + item.size()) throw fail();
    residues.push_back(r);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }

  std::string_view rest = text.substr(close + 1);
  const auto mod = rest.find("mod");
  if (mod == std::string_view::npos) throw fail();
  rest.remove_prefix(mod + 3);
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\n' || rest.back() == '\r')) rest.remove_suffix(1);
  int m = 0;
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), m);
  if (ec != std::errc{} || ptr != rest.data() + rest.size()) throw fail();
  return ProductForm(m, std::move(residues));
}

long long ProductForm::exponent_of(int r) const {
  long long n = 0;
  for (int x : residues_) {
    if (x == r) ++n;
    if (x == -r) --n;
  }
  return n;
}

ExponentSeq ProductForm::exponents(int limit) const {
  std::vector<long long> base(static_cast<std::size_t>(modulus_) + 1, 0);
  for (int r = 1; r <= modulus_; ++r) base[static_cast<std::size_t>(r)] = exponent_of(r);
  ExponentSeq s;
  for (int j = 1; j <= limit; ++j) s.e.emplace_back(base[static_cast<std::size_t>((j - 1) % modulus_ + 1)]);
  return s;
}

std::string ProductForm::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(residues_[i]);
  }
  s += "] mod " + std::to_string(modulus_);
  return s;
}

CoeffSeries expand_product(const ExponentSeq& e, int limit) {
  if (limit < 0) throw std::invalid_argument("limit must be nonnegative");
  std::vector<BigInt> g(static_cast<std::size_t>(limit) + 1, BigInt(0));
  g[0] = 1;
  for (int j = 1; j <= std::min(limit, e.limit()); ++j) {
    multiply_by_euler_factor(g, j, -e[static_cast<std::size_t>(j)]);
  }
  return CoeffSeries{std::move(g)};
}

CoeffSeries expand_product(const ProductForm& form, int limit) {
  return expand_product(form.exponents(limit), limit);
}

std::string_view to_string(PeriodKind kind) {
  switch (kind) {
    case PeriodKind::Periodic:
      return "Periodic";
    case PeriodKind::Aperiodic:
      return "Aperiodic";
    case PeriodKind::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

PeriodVerdict detect_period(const ExponentSeq& e, int modulus, int min_periods) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  if (min_periods < 1) throw std::invalid_argument("min_periods must be positive");
  const int n = e.limit();

  PeriodVerdict v;
  v.periods_checked = n / modulus;
  for (int j = 1; j + modulus <= n; ++j) {
    if (e[static_cast<std::size_t>(j)] != e[static_cast<std::size_t>(j + modulus)]) {
      v.kind = PeriodKind::Aperiodic;
      v.first_violation = j + modulus;
      break;
    }
  }
  if (n >= modulus) v.pattern = ProductForm::from_period(e, modulus);
  if (!v.first_violation) {
    v.kind = n >= min_periods * modulus ? PeriodKind::Periodic : PeriodKind::Inconclusive;
  }
  return v;
}

}  // namespace oddw
