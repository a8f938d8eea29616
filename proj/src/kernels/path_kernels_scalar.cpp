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

#include "oddw/path_kernels.hpp"

#include <algorithm>

namespace oddw::kernels {

namespace {

void relax_row_scalar(std::span<const std::int32_t> freq, std::span<const std::int32_t> prev,
                      std::span<std::int32_t> out) {
  const std::size_t n = out.size();
  out[0] = kAbsent;
  out[n - 1] = kAbsent;
  for (std::size_t x = 1; x + 1 < n; ++x) {
    out[x] = std::max(kAbsent, freq[x] + std::max(prev[x - 1], prev[x + 1]));
  }
}

std::int32_t row_max_scalar(std::span<const std::int32_t> row) {
  return *std::max_element(row.begin(), row.end());
}

constexpr PathKernels kScalar{"scalar", &relax_row_scalar, &row_max_scalar};

}  // namespace

const PathKernels& scalar_kernels() { return kScalar; }

}  // namespace oddw::kernels
