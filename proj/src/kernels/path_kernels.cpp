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

#include <cstdlib>
#include <string>

namespace oddw::kernels {

#if defined(ODDW_HAVE_AVX2_KERNELS)
const PathKernels& avx2_kernels();
#endif
#if defined(ODDW_HAVE_NEON_KERNELS)
const PathKernels& neon_kernels();
#endif

std::vector<const PathKernels*> available_kernels() {
  std::vector<const PathKernels*> out{&scalar_kernels()};
#if defined(ODDW_HAVE_AVX2_KERNELS)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) out.push_back(&avx2_kernels());
#endif
#if defined(ODDW_HAVE_NEON_KERNELS)
  out.push_back(&neon_kernels());
#endif
  return out;
}

const PathKernels& active_kernels() {
  static const PathKernels& chosen = [] () -> const PathKernels& {
    const auto all = available_kernels();
    if (const char* want = std::getenv("ODDW_KERNELS")) {
      for (const PathKernels* k : all) {
        if (k->name == want) return *k;
      }
    }
    return *all.back();
  }();
  return chosen;
}

}  // namespace oddw::kernels
