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

#include "pentasum/polygonal.hpp"

#include <algorithm>
#include <string>

namespace pentasum {

i64 pentagonal(i64 k) {
    const i128 kk = k;
    return narrow(kk * (3 * kk - 1) / 2, "pentagonal");
}

i64 polygonal(i64 m, i64 k) {
    if (m < 3) throw Error(ErrorCode::domain, "polygonal order must be >= 3, got " + std::to_string(m));
    if (k < 0) throw Error(ErrorCode::domain, "polygonal argument must be >= 0, got " + std::to_string(k));
    const i128 kk = k;
    return narrow(static_cast<i128>(m - 2) * (kk * (kk - 1) / 2) + kk, "polygonal");
}

std::optional<i64> pentagonal_index(i64 v) {
    if (v < 0) return std::nullopt;
    // v = k(3k-1)/2  <=>  24v + 1 = (6k - 1)^2
    const auto root = exact_sqrt(static_cast<u128>(v) * 24 + 1);
    if (!root) return std::nullopt;
    if (*root == 1) return 0;
    if ((*root + 1) % 6 != 0) return std::nullopt;
    return static_cast<i64>((*root + 1) / 6);
}

std::optional<i64> generalized_pentagonal_argument(i64 v) {
    if (v < 0) return std::nullopt;
    const auto root = exact_sqrt(static_cast<u128>(v) * 24 + 1);
    if (!root) return std::nullopt;
    const auto r = static_cast<i64>(*root);
    if ((r + 1) % 6 == 0) return (r + 1) / 6;
    if ((r - 1) % 6 == 0) return -((r - 1) / 6);
    return std::nullopt;
}

PentagonalTable::PentagonalTable(i64 bound, std::size_t memory_budget) : bound_(bound) {
    if (bound < 0) throw Error(ErrorCode::domain, "table bound must be >= 0");
    const auto words = static_cast<u64>(bound) / 64 + 1;
    if (words > memory_budget / sizeof(u64))
        throw Error(ErrorCode::resource_limit,
                    "pentagonal table to " + std::to_string(bound) + " exceeds memory budget of " +
                        std::to_string(memory_budget) + " bytes");
    bits_.assign(words, 0);
    values_ = pentagonal_values_upto(bound);
    for (const i64 v : values_) bits_[static_cast<u64>(v) >> 6] |= u64{1} << (v & 63);
}

PentagonalTable pentagonals_upto(i64 bound, std::size_t memory_budget) {
    return PentagonalTable(bound, memory_budget);
}

std::vector<i64> pentagonal_values_upto(i64 bound) {
    std::vector<i64> out;
    for (i64 k = 0;; ++k) {
        const i64 v = pentagonal(k);
        if (v > bound) break;
        out.push_back(v);
    }
    return out;
}

std::vector<i64> generalized_pentagonals_upto(i64 bound) {
    std::vector<i64> out;
    for (i64 k = 0;; ++k) {
        const i64 a = pentagonal(k);
        if (a > bound) break;
        out.push_back(a);
        const i64 b = pentagonal(-k - 1);  // (k+1)(3k+4)/2, just above p5(k+1)
        if (b <= bound) out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace pentasum
