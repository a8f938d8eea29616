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

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oddw {

using BigInt = boost::multiprecision::cpp_int;

/// Truncated power series a_0 + a_1 q + ... + a_N q^N.
struct CoeffSeries {
  std::vector<BigInt> coeffs;

  int limit() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  const BigInt& operator[](std::size_t n) const { return coeffs[n]; }

  /// First N + 1 coefficients.
  CoeffSeries truncated(int n) const;

  bool operator==(const CoeffSeries&) const = default;
};

/// Exponents e_1..e_N of prod_j (1 - q^j)^(-e_j). Index 0 is unused and
/// kept at zero so that e[j] is e_j.
struct ExponentSeq {
  std::vector<BigInt> e{BigInt(0)};

  int limit() const noexcept { return static_cast<int>(e.size()) - 1; }
  const BigInt& operator[](std::size_t j) const { return e[j]; }

  static ExponentSeq from_values(const std::vector<long long>& e1_to_eN);

  bool operator==(const ExponentSeq&) const = default;
};

/// Multiplies g in place by (1 - q^j)^e, truncated to g's length. Uses the
/// binomial series, so negative and large exponents cost the same.
void multiply_by_euler_factor(std::vector<BigInt>& g, int j, const BigInt& e);

/// Peels off one Euler factor per step. After step j the working series has
/// zero coefficients at 1..j.
class EulerFactorizer {
 public:
  explicit EulerFactorizer(const CoeffSeries& series);

  bool done() const noexcept { return next_ > limit(); }
  int next_index() const noexcept { return next_; }
  void step();

  const std::vector<BigInt>& working() const noexcept { return g_; }
  const ExponentSeq& exponents() const noexcept { return e_; }

 private:
  int limit() const noexcept { return static_cast<int>(g_.size()) - 1; }

  std::vector<BigInt> g_;
  ExponentSeq e_;
  int next_ = 1;
};

/// The unique e_1..e_N with series == prod (1 - q^j)^(-e_j) mod q^(N+1).
/// Throws std::invalid_argument unless a_0 == 1.
ExponentSeq euler_exponents(const CoeffSeries& series);

/// Periodic exponent pattern written as a signed residue multiset, e.g.
/// `[1, 2, -3, 4, 5] mod 6`. Residues lie in 1..M (M stands for the zero
/// class); a residue r appears |e_r| times, negated when e_r < 0.
class ProductForm {
 public:
  ProductForm(int modulus, std::vector<int> residues);

  /// Pattern from the first period e_1..e_M of `e`.
  static ProductForm from_period(const ExponentSeq& e, int modulus);

  /// Parses `[r1, r2, ...] mod M`.
  static ProductForm parse(std::string_view text);

  int modulus() const noexcept { return modulus_; }
  const std::vector<int>& residues() const noexcept { return residues_; }

  /// Net exponent of residue class r (1..M).
  long long exponent_of(int r) const;

  /// e_1..e_N of the periodic extension.
  ExponentSeq exponents(int limit) const;

  std::string to_string() const;

  bool operator==(const ProductForm&) const = default;

 private:
  int modulus_;
  std::vector<int> residues_;
};

/// Coefficients of prod_j (1 - q^j)^(-e_j) up to q^N.
CoeffSeries expand_product(const ExponentSeq& e, int limit);
CoeffSeries expand_product(const ProductForm& form, int limit);

enum class PeriodKind { Periodic, Aperiodic, Inconclusive };

std::string_view to_string(PeriodKind kind);

struct PeriodVerdict {
  PeriodKind kind = PeriodKind::Inconclusive;
  /// Pattern read from e_1..e_M; present whenever N >= M.
  std::optional<ProductForm> pattern;
  /// Smallest j + M with e_j != e_{j+M}.
  std::optional<int> first_violation;
  /// Full periods covered by the data: floor(N / M).
  int periods_checked = 0;
};

/// Tests e_j == e_{j+M} for every j + M <= N. Periodic needs no violation
/// and N >= min_periods * M; Inconclusive means no violation on too little data.
PeriodVerdict detect_period(const ExponentSeq& e, int modulus, int min_periods = 2);

}  // namespace oddw
