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

#include <stdexcept>
#include <string>
#include <string_view>

namespace pentasum {

enum class ErrorCode {
    overflow,
    domain,
    resource_limit,
    search_cap_exceeded,
    hypothesis_violation,
    predicate_violation,
    no_valid_shift,
    bound_violation,
    identity_violation,
    not_representable,
    unsupported_triple,
    internal,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::domain: return "domain";
    case ErrorCode::resource_limit: return "resource-limit";
    case ErrorCode::search_cap_exceeded: return "search-cap-exceeded";
    case ErrorCode::hypothesis_violation: return "hypothesis-violation";
    case ErrorCode::predicate_violation: return "predicate-violation";
    case ErrorCode::no_valid_shift: return "no-valid-shift";
    case ErrorCode::bound_violation: return "bound-violation";
    case ErrorCode::identity_violation: return "identity-violation";
    case ErrorCode::not_representable: return "not-representable";
    case ErrorCode::unsupported_triple: return "unsupported-triple";
    case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace pentasum
