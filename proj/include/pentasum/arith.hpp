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

/// @file arith.hpp
/// Exact integer helpers shared by every module: 128-bit intermediates,
/// integer square roots and a filtered perfect-square test.

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "pentasum/error.hpp"

namespace pentasum {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

/// Largest n accepted by the decomposition entry points.
inline constexpr i64 kMaxInput = 1'000'000'000'000'000;  // 10^15

inline std::string to_decimal(i128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    std::string s;
    while (u > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.insert(s.begin(), '-');
    return s;
}

/// Narrows a 128-bit intermediate, raising an overflow error instead of wrapping.
inline i64 narrow(i128 v, const char* what = "value") {
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
        throw Error(ErrorCode::overflow, std::string(what) + " " + to_decimal(v) + " exceeds 64-bit range");
    return static_cast<i64>(v);
}

/// Least nonnegative residue, for any sign of a.
constexpr i64 mod(i64 a, i64 m) {
    const i64 r = a % m;
    return r < 0 ? r + m : r;
}

constexpr i64 mod(i128 a, i64 m) {
    const i128 r = a % m;
    return static_cast<i64>(r < 0 ? r + m : r);
}

/// floor(sqrt(x)), exact for the whole 128-bit unsigned range.
inline u64 isqrt(u128 x) {
    if (x == 0) return 0;
    const long double approx = std::sqrt(static_cast<long double>(x));
    u64 r = approx >= 18446744073709551615.0L ? ~0ull : static_cast<u64>(approx);
    while (static_cast<u128>(r) * r > x) --r;
    while (r < ~0ull && static_cast<u128>(r + 1) * (r + 1) <= x) ++r;
    return r;
}

inline i64 isqrt(i64 x) {
    if (x < 0) throw Error(ErrorCode::domain, "isqrt of negative " + std::to_string(x));
    return static_cast<i64>(isqrt(static_cast<u128>(x)));
}

namespace detail {

template <unsigned M>
constexpr std::array<bool, M> square_residues() {
    std::array<bool, M> table{};
    for (unsigned i = 0; i < M; ++i) table[(i * i) % M] = true;
    return table;
}

inline constexpr auto kSquaresMod64 = square_residues<64>();
inline constexpr auto kSquaresMod63 = square_residues<63>();
inline constexpr auto kSquaresMod65 = square_residues<65>();
inline constexpr auto kSquaresMod11 = square_residues<11>();

} // namespace detail

/// Returns the root when x is a perfect square. Cheap residue filters reject
/// about 99.6% of non-squares before any root is taken.
inline std::optional<u64> exact_sqrt(u64 x) {
    if (!detail::kSquaresMod64[x & 63]) return std::nullopt;
    if (!detail::kSquaresMod63[x % 63]) return std::nullopt;
    if (!detail::kSquaresMod65[x % 65]) return std::nullopt;
    if (!detail::kSquaresMod11[x % 11]) return std::nullopt;
    const u64 r = isqrt(static_cast<u128>(x));
    if (static_cast<u128>(r) * r != x) return std::nullopt;
    return r;
}

inline std::optional<u64> exact_sqrt(u128 x) {
    if (x <= ~0ull) return exact_sqrt(static_cast<u64>(x));
    const u64 r = isqrt(x);
    if (static_cast<u128>(r) * r != x) return std::nullopt;
    return r;
}

/// Multiplicity of the prime p in v (v > 0); v is divided down in place.
inline int strip_factor(i64& v, i64 p) {
    int e = 0;
    while (v != 0 && v % p == 0) {
        v /= p;
        ++e;
    }
    return e;
}

/// Solution of r = r1 (mod m1), r = r2 (mod m2) for coprime moduli, in [0, m1*m2).
inline i64 crt_pair(i64 r1, i64 m1, i64 r2, i64 m2) {
    // m1^{-1} mod m2 by extended Euclid
    i64 old_r = mod(m1, m2), r = m2, old_s = 1, s = 0;
    while (r != 0) {
        const i64 q = old_r / r;
        const i64 t = old_r - q * r;
        old_r = r;
        r = t;
        const i64 u = old_s - q * s;
        old_s = s;
        s = u;
    }
    if (old_r != 1) throw Error(ErrorCode::domain, "crt_pair: moduli not coprime");
    const i64 inv = mod(old_s, m2);
    const i64 k = mod(static_cast<i128>(mod(r2 - r1, m2)) * inv, m2);
    return mod(static_cast<i128>(r1) + static_cast<i128>(k) * m1, m1 * m2);
}

} // namespace pentasum
