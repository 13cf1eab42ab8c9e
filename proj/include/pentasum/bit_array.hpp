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

/// @file bit_array.hpp
/// Fixed-size bit array over [0, size) with word-level shifted OR.

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace pentasum {

class BitArray {
public:
    BitArray() = default;
    explicit BitArray(std::uint64_t nbits) : nbits_(nbits), words_(nbits / 64 + 1, 0) {}

    std::uint64_t size() const noexcept { return nbits_; }
    std::uint64_t word_count() const noexcept { return words_.size(); }
    std::span<std::uint64_t> words() noexcept { return words_; }
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    bool test(std::uint64_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::uint64_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    /// Word j of (this << shift), zero-filled from below.
    std::uint64_t shifted_word(std::uint64_t j, std::uint64_t shift) const noexcept {
        const std::uint64_t ws = shift >> 6;
        const unsigned bs = shift & 63;
        if (j < ws) return 0;
        const std::uint64_t k = j - ws;
        std::uint64_t v = words_[k] << bs;
        if (bs != 0 && k > 0) v |= words_[k - 1] >> (64 - bs);
        return v;
    }

    /// words [lo, hi) |= (src << shift) over the same words.
    void or_shifted(const BitArray& src, std::uint64_t shift, std::uint64_t lo, std::uint64_t hi) noexcept {
        const std::uint64_t ws = shift >> 6;
        const unsigned bs = shift & 63;
        std::uint64_t j = lo < ws ? ws : lo;
        if (j >= hi) return;
        const std::uint64_t* s = src.words_.data();
        std::uint64_t* d = words_.data();
        if (bs == 0) {
            for (; j < hi; ++j) d[j] |= s[j - ws];
            return;
        }
        if (j == ws) {
            d[j] |= s[0] << bs;
            ++j;
        }
        for (; j < hi; ++j) d[j] |= (s[j - ws] << bs) | (s[j - ws - 1] >> (64 - bs));
    }

    /// Zeroes the padding bits at and above size().
    void clear_tail() noexcept {
        const unsigned used = nbits_ & 63;
        words_.back() &= used == 0 ? 0 : (~std::uint64_t{0} >> (64 - used));
    }

    std::uint64_t count() const noexcept {
        std::uint64_t c = 0;
        for (const auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
        return c;
    }

    std::uint64_t bytes() const noexcept { return words_.size() * sizeof(std::uint64_t); }

private:
    std::uint64_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace pentasum
