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

#include <iosfwd>

namespace oddw::cli {

enum ExitCode : int {
  kSuccess = 0,
  kGoldenMismatch = 1,
  kUsageError = 2,
  kInconclusiveStrict = 3,
};

/// Environment variable naming the default cache directory.
inline constexpr const char* kCacheDirEnv = "ODDW_CACHE_DIR";

/// Entry point of the `oddw` tool with injectable streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace oddw::cli
