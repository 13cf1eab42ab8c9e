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

/// @file polygonal.hpp
/// Pentagonal and polygonal numbers: exact evaluation, membership and tables.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pentasum/arith.hpp"

namespace pentasum {

inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{1} << 30;  // 1 GiB

/// k(3k-1)/2. Negative k gives the second branch k'(3k'+1)/2 with k' = -k.
i64 pentagonal(i64 k);

/// (m-2) k(k-1)/2 + k for m >= 3, k >= 0.
i64 polygonal(i64 m, i64 k);

/// The k >= 0 with pentagonal(k) == v, if any.
std::optional<i64> pentagonal_index(i64 v);

inline bool is_pentagonal(i64 v) { return pentagonal_index(v).has_value(); }

/// Some x in Z with pentagonal(x) == v (the nonnegative one when both exist).
std::optional<i64> generalized_pentagonal_argument(i64 v);

/// All p5(k) <= bound for k >= 0, ascending, with O(1) membership.
class PentagonalTable {
public:
    PentagonalTable(i64 bound, std::size_t memory_budget = kDefaultMemoryBudget);

    i64 bound() const noexcept { return bound_; }
    std::span<const i64> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

    bool contains(i64 v) const noexcept {
        if (v < 0 || v > bound_) return false;
        const auto u = static_cast<u64>(v);
        return (bits_[u >> 6] >> (u & 63)) & 1u;
    }

private:
    i64 bound_;
    std::vector<i64> values_;
    std::vector<u64> bits_;
};

PentagonalTable pentagonals_upto(i64 bound, std::size_t memory_budget = kDefaultMemoryBudget);

/// Distinct values of p5(x), x in Z, up to bound, ascending.
std::vector<i64> generalized_pentagonals_upto(i64 bound);

/// Nonnegative-argument pentagonals up to bound, ascending (no membership index).
std::vector<i64> pentagonal_values_upto(i64 bound);

} // namespace pentasum
