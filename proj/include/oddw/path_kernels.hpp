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

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace oddw::kernels {

/// Marker for grid slots that hold no entry. Kernels clamp to it, so a
/// chain of additions over absent slots never overflows int32.
inline constexpr std::int32_t kAbsent = -(1 << 29);

// Row stencil of the maximum-path dynamic program:
//   out[x] = max(kAbsent, freq[x] + max(prev[x - 1], prev[x + 1]))
// for 1 <= x < size - 1. out[0] and out[size - 1] are set to kAbsent.
// All three spans share the same size (>= 2); out must not alias the inputs.
using RelaxRowFn = void (*)(std::span<const std::int32_t> freq, std::span<const std::int32_t> prev,
                            std::span<std::int32_t> out);

// Maximum element of a nonempty row.
using RowMaxFn = std::int32_t (*)(std::span<const std::int32_t> row);

struct PathKernels {
  std::string_view name;
  RelaxRowFn relax_row;
  RowMaxFn row_max;
};

const PathKernels& scalar_kernels();

/// Every variant compiled in and usable on this CPU, scalar first.
std::vector<const PathKernels*> available_kernels();

/// Variant picked at first use: the widest supported one unless the
/// ODDW_KERNELS environment variable names another ("scalar", "avx2", "neon").
const PathKernels& active_kernels();

}  // namespace oddw::kernels
