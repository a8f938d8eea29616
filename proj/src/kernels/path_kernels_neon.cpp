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

#include <arm_neon.h>

#include <algorithm>

#include "oddw/path_kernels.hpp"

namespace oddw::kernels {

namespace {

void relax_row_neon(std::span<const std::int32_t> freq, std::span<const std::int32_t> prev,
                    std::span<std::int32_t> out) {
  const std::size_t n = out.size();
  out[0] = kAbsent;
  out[n - 1] = kAbsent;
  const int32x4_t floor = vdupq_n_s32(kAbsent);
  std::size_t x = 1;
  for (; x + 4 < n; x += 4) {
    const int32x4_t left = vld1q_s32(prev.data() + x - 1);
    const int32x4_t right = vld1q_s32(prev.data() + x + 1);
    const int32x4_t f = vld1q_s32(freq.data() + x);
    vst1q_s32(out.data() + x, vmaxq_s32(floor, vaddq_s32(f, vmaxq_s32(left, right))));
  }
  for (; x + 1 < n; ++x) {
    out[x] = std::max(kAbsent, freq[x] + std::max(prev[x - 1], prev[x + 1]));
  }
}

std::int32_t row_max_neon(std::span<const std::int32_t> row) {
  const std::size_t n = row.size();
  std::size_t x = 0;
  std::int32_t best = row[0];
  if (n >= 4) {
    int32x4_t acc = vld1q_s32(row.data());
    for (x = 4; x + 4 <= n; x += 4) acc = vmaxq_s32(acc, vld1q_s32(row.data() + x));
    best = vmaxvq_s32(acc);
  }
  for (; x < n; ++x) best = std::max(best, row[x]);
  return best;
}

}  // namespace

const PathKernels& neon_kernels() {
  static constexpr PathKernels k{"neon", &relax_row_neon, &row_max_neon};
  return k;
}

}  // namespace oddw::kernels
