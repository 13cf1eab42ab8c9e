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

/// @file quaternary.hpp
/// Bridges from ternary representations to the zero-sum quaternary forms
/// used by the shift construction:
///
///   half_sum:  x^2 + y^2 + z^2 + (x+y+z)^2 / 2          = n
///   form_234:  2x^2 + 3y^2 + 4z^2 + (2x+3y+4z)^2        = 6q
///   form_123:  x^2 + 2y^2 + 3z^2 + (x+2y+3z)^2          = 6q
///   form_126:  x^2 + 2y^2 + 6z^2 + (x+2y+6z)^2          = 6q
///
/// In each case the bracketed linear form equals -w for the fourth
/// (implied) variable w, so the weights sum to zero against (x, y, z, w).

#include <array>
#include <string_view>

#include "pentasum/arith.hpp"
#include "pentasum/ternary_forms.hpp"

namespace pentasum {

enum class WitnessKind { half_sum, form_234, form_123, form_126 };

constexpr std::string_view to_string(WitnessKind kind) {
    switch (kind) {
    case WitnessKind::half_sum: return "half-sum";
    case WitnessKind::form_234: return "2-3-4";
    case WitnessKind::form_123: return "1-2-3";
    case WitnessKind::form_126: return "1-2-6";
    }
    return "?";
}

/// Weights of (x, y, z) in the linear form; half_sum uses (1, 1, 1) halved.
constexpr std::array<i64, 3> linear_weights(WitnessKind kind) {
    switch (kind) {
    case WitnessKind::half_sum: return {1, 1, 1};
    case WitnessKind::form_234: return {2, 3, 4};
    case WitnessKind::form_123: return {1, 2, 3};
    case WitnessKind::form_126: return {1, 2, 6};
    }
    return {0, 0, 0};
}

struct QuaternaryWitness {
    i64 x = 0;
    i64 y = 0;
    i64 z = 0;
    WitnessKind kind = WitnessKind::half_sum;
    i64 target = 0;

    /// The implied fourth variable: -(x+y+z)/2 for half_sum, minus the
    /// linear form otherwise.
    i64 w() const;

    /// Value of the quaternary form at (x, y, z). For half_sum an odd
    /// x+y+z makes the form non-integral and yields -1.
    i128 value() const;

    bool holds() const { return value() == target; }
};

/// n = x^2 + y^2 + z^2 + (x+y+z)^2/2 for even n >= 0 outside
/// {5^(2k+1) m : m = +-2 (mod 5)}, via 8n = s^2 + 2t^2 + 10z^2.
QuaternaryWitness half_sum_transform(i64 n, const SearchOptions& options = {});

/// 6q = 2x^2+3y^2+4z^2+(2x+3y+4z)^2 from q = a^2+b^2+10c^2:
/// (x, y, z) = (a+b+2c, -b+2c, -3c).
QuaternaryWitness transform_234(i64 q, const SearchOptions& options = {});

/// 6q = x^2+2y^2+3z^2+(x+2y+3z)^2 from q = a^2+b^2+7c^2:
/// (x, y, z) = (6c, a-b-c, b-c).
QuaternaryWitness transform_123(i64 q, const SearchOptions& options = {});

/// 6q = x^2+2y^2+6z^2+(x+2y+6z)^2 from q = a^2+2b^2+10c^2:
/// (x, y, z) = (2a-b+3c, -a-b+3c, -2c).
QuaternaryWitness transform_126(i64 q, const SearchOptions& options = {});

/// Substitutions alone, for identity checks over arbitrary (a, b, c).
QuaternaryWitness substitute_234(i64 a, i64 b, i64 c);
QuaternaryWitness substitute_123(i64 a, i64 b, i64 c);
QuaternaryWitness substitute_126(i64 a, i64 b, i64 c);

/// n in {5^(2k+1) m : m = +-2 (mod 5)}, the set the half-sum form misses
/// among even numbers.
bool half_sum_excluded(i64 n);

} // namespace pentasum
