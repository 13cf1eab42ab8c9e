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

/// @file decomposer.hpp
/// Explicit witnesses for n = p5(w) + b p5(x) + c p5(y) + d p5(z).
///
/// For the triples (1,1,2), (2,3,4), (1,2,3) and (1,2,6), n above a fixed
/// threshold is handled constructively: pick a shift B in an interval
/// around sqrt(n) subject to congruence conditions, represent the residual
///
///     R = (2n + W B) / 3 - W B^2,   W = 1 + b + c + d,
///
/// by the matching zero-sum quaternary form, and add B to every variable.
/// Below the threshold a direct search is used.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pentasum/arith.hpp"
#include "pentasum/quaternary.hpp"
#include "pentasum/ternary_forms.hpp"

namespace pentasum {

/// Weights (b, c, d); the weight of the first slot is always 1.
struct CoefficientTriple {
    i64 b = 1;
    i64 c = 1;
    i64 d = 2;

    friend constexpr bool operator==(const CoefficientTriple&, const CoefficientTriple&) = default;

    constexpr std::array<i64, 4> weights() const { return {1, b, c, d}; }
    constexpr i64 weight_sum() const { return 1 + b + c + d; }
    std::string name() const;
};

inline constexpr CoefficientTriple kTriple112{1, 1, 2};
inline constexpr CoefficientTriple kTriple234{2, 3, 4};
inline constexpr CoefficientTriple kTriple123{1, 2, 3};
inline constexpr CoefficientTriple kTriple126{1, 2, 6};

/// The fifteen triples conjectured to make p5(w)+b p5(x)+c p5(y)+d p5(z) universal.
std::span<const CoefficientTriple> candidate_triples();

/// Triples with a constructive path.
bool is_constructive_triple(const CoefficientTriple& t);

// Constructive thresholds, each the ceiling of (m + o)^2 / (sqrt(u) - sqrt(l))^2
// where sqrt(l n) + .. <= B <= sqrt(u n) + .. is the shift interval and m the
// number of consecutive integers the congruence conditions need.

/// ceil(3^2 / (sqrt(2/15) - 1/3)^2)
inline constexpr i64 kThreshold112 = 8892;
/// ceil(15^2 / (sqrt(2/15) - 1/3)^2), needed when 5 | n
inline constexpr i64 kThreshold112Mult5 = 222289;
/// ceil((81 - 1/6 + 1/16)^2 / (sqrt(1/15) - sqrt(2/33))^2)
inline constexpr i64 kThreshold234 = 45325138;
/// ceil((7*81 + 1/48 - 1/6)^2 / (sqrt(2/21) - sqrt(1/12))^2)
inline constexpr i64 kThreshold123 = 808834881;
/// ceil((360 + 1/16 - 1/6)^2 / (sqrt(1/15) - sqrt(2/33))^2)
inline constexpr i64 kThreshold126 = 897099189;

/// Whether decompose() takes the constructive path for n by default.
bool constructive_applicable(i64 n, const CoefficientTriple& t);

/// sqrt(radicand_num * n / radicand_den) + offset_num / offset_den
struct ShiftBound {
    i64 radicand_num = 1;
    i64 radicand_den = 1;
    i64 offset_num = 0;
    i64 offset_den = 1;

    /// bound <= B, decided exactly.
    bool at_most(i64 B, i64 n) const;
    /// B <= bound, decided exactly.
    bool at_least(i64 B, i64 n) const;
    long double approx(i64 n) const;
    std::string describe() const;
};

/// B mod modulus must lie in residues.
struct Congruence {
    i64 modulus = 1;
    std::vector<i64> residues;

    bool admits(i64 B) const;
};

struct ShiftSelection {
    i64 B = 0;
    ShiftBound lower;
    ShiftBound upper;
    std::vector<Congruence> congruences;
    /// (B - 1)^2 mod 5 target for (1,1,2) with 5 | n; one of 0, 1, -1.
    std::optional<int> delta;
    /// (2n + W B)/3 - W B^2
    i64 residual = 0;
};

ShiftSelection select_shift_112(i64 n);
ShiftSelection select_shift_234(i64 n);
ShiftSelection select_shift_123(i64 n);
ShiftSelection select_shift_126(i64 n);
ShiftSelection select_shift(i64 n, const CoefficientTriple& t);

enum class Method { constructive, direct_search };

constexpr std::string_view to_string(Method m) {
    return m == Method::constructive ? "constructive" : "direct-search";
}

struct Decomposition {
    CoefficientTriple triple;
    i64 n = 0;
    /// index[0] carries weight 1, index[1..3] carry b, c, d.
    std::array<i64, 4> index{};
    Method method = Method::direct_search;
    std::optional<ShiftSelection> shift;
    std::optional<QuaternaryWitness> witness;
};

enum class MethodChoice { automatic, constructive, search };

struct DecomposeOptions {
    MethodChoice method = MethodChoice::automatic;
    SearchOptions ternary_search;
    /// Cap on direct-search probes; unset searches to exhaustion.
    std::optional<std::uint64_t> probe_budget;
};

Decomposition decompose(i64 n, const CoefficientTriple& t, const DecomposeOptions& options = {});

/// Shift a quaternary witness by B into a decomposition of the n it determines.
Decomposition reconstruct(i64 B, const QuaternaryWitness& witness, const CoefficientTriple& t);

/// Greedy exhaustive search: slots d, c, b run downward from their largest
/// feasible index and the weight-1 slot is solved by a pentagonal test.
Decomposition direct_search(i64 n, const CoefficientTriple& t, std::optional<std::uint64_t> probe_budget = {});

/// Recomputes the weighted pentagonal sum from scratch.
bool certify(const Decomposition& d);
bool certify(i64 n, const CoefficientTriple& t, const std::array<i64, 4>& index);

/// Largest k >= 0 with p5(k) <= v (v >= 0).
i64 max_pentagonal_index(i64 v);

} // namespace pentasum
