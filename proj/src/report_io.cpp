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

#include "oddw/report_io.hpp"

namespace oddw {

nlohmann::ordered_json params_json(const ArrayParams& params) {
  nlohmann::ordered_json j;
  j["ell"] = params.ell();
  j["parity"] = params.parity();
  j["k_weights"] = params.k_weights();
  j["boundary"] = params.boundary();
  return j;
}

nlohmann::ordered_json series_json(const CoeffSeries& series) {
  auto j = nlohmann::ordered_json::array();
  for (const BigInt& a : series.coeffs) j.push_back(a.str());
  return j;
}

CoeffSeries series_from_json(const nlohmann::json& j) {
  CoeffSeries s;
  for (const auto& item : j) s.coeffs.emplace_back(item.get<std::string>());
  return s;
}

nlohmann::ordered_json exponents_json(const ExponentSeq& e) {
  auto j = nlohmann::ordered_json::array();
  for (std::size_t i = 1; i < e.e.size(); ++i) j.push_back(e.e[i].str());
  return j;
}

nlohmann::ordered_json report_json(const ConjectureReport& r) {
  nlohmann::ordered_json j;
  j["params"] = params_json(r.params);
  j["N"] = r.limit;
  j["coefficients"] = series_json(r.coefficients);
  j["exponents"] = exponents_json(r.exponents);
  j["modulus"] = r.modulus;
  nlohmann::ordered_json verdict;
  verdict["kind"] = std::string(to_string(r.verdict));
  verdict["first_violation"] = r.first_violation ? nlohmann::ordered_json(*r.first_violation) : nullptr;
  j["verdict"] = verdict;
  j["pattern"] = r.pattern ? nlohmann::ordered_json(r.pattern->to_string()) : nullptr;
  j["periods_checked"] = r.periods_checked;
  j["elapsed"] = r.elapsed.count();
  return j;
}

}  // namespace oddw
