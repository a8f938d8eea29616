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

#include <atomic>
#include <ctime>
#include <fstream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "oddw/report_io.hpp"

namespace oddw {

namespace fs = std::filesystem;

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string temp_suffix() {
  static std::atomic<unsigned> counter{0};
  std::ostringstream os;
  os << ".tmp." << ::getpid() << "." << counter++ << "." << std::random_device{}();
  return os.str();
}

}  // namespace

SeriesCache::SeriesCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path SeriesCache::entry_path(const ArrayParams& params) const {
  std::string name = "series_l" + std::to_string(params.ell()) + "_p" + std::to_string(params.parity()) + "_b";
  for (std::size_t i = 0; i < params.boundary().size(); ++i) {
    if (i) name += "-";
    name += std::to_string(params.boundary()[i]);
  }
  return dir_ / (name + ".json");
}

std::optional<nlohmann::json> SeriesCache::read_entry(const ArrayParams& params) const {
  std::ifstream in(entry_path(params));
  if (!in) return std::nullopt;
  nlohmann::json j = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  if (j.value("version", "") != kToolVersion) return std::nullopt;
  const auto& key = j["key"];
  if (key.value("ell", -1) != params.ell() || key.value("parity", -1) != params.parity() ||
      key.value("boundary", std::vector<int>{}) != params.boundary()) {
    return std::nullopt;
  }
  return j;
}

std::optional<CoeffSeries> SeriesCache::lookup(const ArrayParams& params, int limit) const {
  const auto entry = read_entry(params);
  if (!entry || entry->value("limit", -1) < limit) return std::nullopt;
  const CoeffSeries full = series_from_json((*entry)["coefficients"]);
  if (full.limit() < limit) return std::nullopt;
  return full.truncated(limit);
}

void SeriesCache::store(const ArrayParams& params, const CoeffSeries& series) const {
  if (const auto existing = read_entry(params); existing && existing->value("limit", -1) >= series.limit()) return;

  nlohmann::ordered_json j;
  nlohmann::ordered_json key;
  key["ell"] = params.ell();
  key["parity"] = params.parity();
  key["boundary"] = params.boundary();
  j["key"] = key;
  j["version"] = kToolVersion;
  j["timestamp"] = utc_timestamp();
  j["limit"] = series.limit();
  j["coefficients"] = series_json(series);

  fs::create_directories(dir_);
  const fs::path target = entry_path(params);
  const fs::path tmp = target.string() + temp_suffix();
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << j.dump(2) << '\n';
    if (!out.flush()) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace oddw
