// Copyright 2026 The pentasum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pentasum::cli {

/// Exit statuses of the command-line tool.
enum Exit : int {
    kOk = 0,
    kFailed = 1,       ///< certification failed, or gaps where none are expected
    kUnsupported = 2,  ///< usage error, unsupported triple or form
    kInternal = 3,     ///< a guaranteed representation was not found, or another internal error
};

/// Environment variable holding the default memory budget (bytes, K/M/G suffix allowed).
inline constexpr const char* kMemoryBudgetEnv = "PENTASUM_MEMORY_BUDGET";

/// Runs the tool with args excluding the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace pentasum::cli
