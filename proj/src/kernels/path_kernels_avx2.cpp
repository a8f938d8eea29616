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

#include <immintrin.h>

#include <algorithm>

#include "oddw/path_kernels.hpp"

namespace oddw::kernels {

namespace {

void relax_row_avx2(std::span<const std::int32_t> freq, std::span<const std::int32_t> prev,
                    std::span<std::int32_t> out) {
  const std::size_t n = out.size();
  out[0] = kAbsent;
  out[n - 1] = kAbsent;
  const __m256i floor = _mm256_set1_epi32(kAbsent);
  std::size_t x = 1;
  for (; x + 8 < n; x += 8) {
    const __m256i left = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prev.data() + x - 1));
    const __m256i right = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prev.data() + x + 1));
    const __m256i f = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(freq.data() + x));
    const __m256i v = _mm256_max_epi32(floor, _mm256_add_epi32(f, _mm256_max_epi32(left, right)));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + x), v);
  }
  for (; x + 1 < n; ++x) {
    out[x] = std::max(kAbsent, freq[x] + std::max(prev[x - 1], prev[x + 1]));
  }
}

std::int32_t row_max_avx2(std::span<const std::int32_t> row) {
  const std::size_t n = row.size();
  std::size_t x = 0;
  std::int32_t best = row[0];
  if (n >= 8) {
    __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row.data()));
    for (x = 8; x + 8 <= n; x += 8) {
      acc = _mm256_max_epi32(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row.data() + x)));
    }
    __m128i m = _mm_max_epi32(_mm256_castsi256_si128(acc), _mm256_extracti128_si256(acc, 1));
    m = _mm_max_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(1, 0, 3, 2)));
    m = _mm_max_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(2, 3, 0, 1)));
    best = _mm_cvtsi128_si32(m);
  }
  for (; x < n; ++x) best = std::max(best, row[x]);
  return best;
}

}  // namespace

const PathKernels& avx2_kernels() {
  static constexpr PathKernels k{"avx2", &relax_row_avx2, &row_max_avx2};
  return k;
}

}  // namespace oddw::kernels
