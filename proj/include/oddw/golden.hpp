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

#include <string>
#include <string_view>
#include <vector>

#include "oddw/qseries.hpp"

namespace oddw {

/// One line `[k0, ..., ] product: [pattern] mod M` of the reference list.
struct GoldenProduct {
  std::vector<int> weights;  // boundary vector as printed, bottom to top
  ProductForm form;
  std::string line;

  int ell() const noexcept { return (static_cast<int>(weights.size()) + 1) / 2; }
};

/// The reference run with no periodic product: exponents given as a signed
/// multiset, j repeated e_j times (negated for negative e_j).
struct GoldenAperiodic {
  int parity = 0;
  std::vector<int> weights;
  int limit = 0;
  ExponentSeq exponents;
};

std::vector<GoldenProduct> parse_golden_products(std::string_view text);
GoldenAperiodic parse_golden_aperiodic(std::string_view text);

/// Data compiled in from data/golden_products.txt and data/aperiodic_exponents.txt.
std::string_view embedded_golden_products();
std::string_view embedded_golden_aperiodic();

}  // namespace oddw
