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

#include "oddw/golden.hpp"

#include <charconv>
#include <map>
#include <stdexcept>

#include "golden_data.inc"

namespace oddw {

namespace {

std::vector<int> parse_int_list(std::string_view body) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < body.size()) {
    const char c = body[i];
    if (c == '-' || (c >= '0' && c <= '9')) {
      int v = 0;
      const auto [ptr, ec] = std::from_chars(body.data() + i, body.data() + body.size(), v);
      if (ec != std::errc{}) throw std::invalid_argument("bad integer in golden data");
      out.push_back(v);
      i = static_cast<std::size_t>(ptr - body.data());
    } else if (c == ',' || c == ' ' || c == '\n' || c == '\r') {
      ++i;
    } else {
      throw std::invalid_argument(std::string("unexpected character in golden list: ") + c);
    }
  }
  return out;
}

std::string_view bracketed(std::string_view text, std::size_t from, std::size_t* end = nullptr) {
  const auto open = text.find('[', from);
  const auto close = text.find(']', open);
  if (open == std::string_view::npos || close == std::string_view::npos) {
    throw std::invalid_argument("missing bracketed list in golden data");
  }
  if (end) *end = close + 1;
  return text.substr(open + 1, close - open - 1);
}

}  // namespace

std::vector<GoldenProduct> parse_golden_products(std::string_view text) {
  std::vector<GoldenProduct> out;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty()) continue;

    const auto sep = line.find(" product: ");
    if (sep == std::string_view::npos) throw std::invalid_argument("golden line without 'product:'");
    GoldenProduct g{parse_int_list(bracketed(line, 0)), ProductForm::parse(line.substr(sep + 10)), std::string(line)};
    out.push_back(std::move(g));
  }
  return out;
}

GoldenAperiodic parse_golden_aperiodic(std::string_view text) {
  GoldenAperiodic r;

  const auto p = text.find("parity p =");
  if (p == std::string_view::npos) throw std::invalid_argument("aperiodic reference data lacks parity");
  r.parity = parse_int_list(text.substr(p + 10, text.find(',', p) - p - 10)).at(0);

  const auto hw = text.find("highest_weight");
  if (hw == std::string_view::npos) throw std::invalid_argument("aperiodic reference data lacks weights");
  r.weights = parse_int_list(bracketed(text, hw));

  const auto n = text.find("N =");
  if (n == std::string_view::npos) throw std::invalid_argument("aperiodic reference data lacks N");
  r.limit = parse_int_list(text.substr(n + 3, text.find('\n', n) - n - 3)).at(0);

  const auto ex = text.find("exponents");
  if (ex == std::string_view::npos) throw std::invalid_argument("aperiodic reference data lacks exponents");
  std::map<int, long long> mult;
  for (int j : parse_int_list(bracketed(text, ex))) {
    if (j == 0 || j > r.limit || -j > r.limit) throw std::invalid_argument("reference exponent index out of range");
    mult[j > 0 ? j : -j] += j > 0 ? 1 : -1;
  }
  std::vector<long long> e(static_cast<std::size_t>(r.limit), 0);
  for (const auto& [j, m] : mult) e[static_cast<std::size_t>(j - 1)] = m;
  r.exponents = ExponentSeq::from_values(e);
  return r;
}

std::string_view embedded_golden_products() { return kGoldenProductsText; }
std::string_view embedded_golden_aperiodic() { return kAperiodicExponentsText; }

}  // namespace oddw
