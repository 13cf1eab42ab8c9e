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

/// @file range_verifier.hpp
/// Bulk representability of every n in [0, N] by a1 p5(x1) + ... + ak p5(xk).
///
/// Two sieves are available:
///  - layered: seed a bit array with a1 p5(k), then OR-shift it by every
///    ai p5(k) <= N for each further coefficient;
///  - pair table: enumerate the two smallest coefficients' sums into a bit
///    array P, then cover each chunk of [0, N] with shifted copies of P for
///    sums s of the remaining coefficients, probing leftover n one by one.
/// Both are chunked over word ranges so chunks can run on separate workers.

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pentasum/arith.hpp"
#include "pentasum/decomposer.hpp"
#include "pentasum/polygonal.hpp"

namespace pentasum {

enum class SieveStrategy { automatic, layered, pair_table };

constexpr std::string_view to_string(SieveStrategy s) {
    switch (s) {
    case SieveStrategy::automatic: return "auto";
    case SieveStrategy::layered: return "layered";
    case SieveStrategy::pair_table: return "pair-table";
    }
    return "?";
}

struct VerifyOptions {
    /// Arguments range over Z instead of N.
    bool generalized = false;
    SieveStrategy strategy = SieveStrategy::automatic;
    std::size_t memory_budget = kDefaultMemoryBudget;
    unsigned workers = 1;
    /// Bits per chunk; 0 processes [0, N] as a single chunk.
    std::uint64_t chunk_bits = std::uint64_t{1} << 21;
    /// Called with each gap in ascending order as soon as its chunk is done.
    std::function<void(i64)> on_gap;
    /// Gaps and non-gaps re-checked by an independent search.
    std::size_t recheck_samples = 8;
    std::uint64_t recheck_seed = 0x5eed;
};

struct VerificationReport {
    std::vector<i64> coefficients;
    i64 bound = 0;
    bool generalized = false;
    std::vector<i64> gaps;
    i64 checked = 0;
    std::chrono::nanoseconds elapsed{0};
    std::size_t memory_peak = 0;
    SieveStrategy strategy = SieveStrategy::layered;
    std::size_t rechecked = 0;
    /// Always true on return; budget or cap failures throw instead.
    bool complete = false;
};

VerificationReport verify_range(std::span<const i64> coefficients, i64 N, const VerifyOptions& options = {});

/// n <= N that are not p5(a) + p5(b) + p5(c) with a, b, c >= 0.
std::vector<i64> three_pentagonal_gaps(i64 N, const VerifyOptions& options = {});

/// One verification per triple in candidate_triples(), weights (1, b, c, d).
std::vector<std::pair<CoefficientTriple, VerificationReport>> verify_candidate_triples(i64 N, const VerifyOptions& options = {});

/// Weight lists with a published proof of universality over N.
bool proven_universal(std::span<const i64> coefficients);

/// Arguments x_i with sum a_i p5(x_i) = n, by plain nested search.
std::optional<std::vector<i64>> find_representation(i64 n, std::span<const i64> coefficients, bool generalized);

/// The twelve numbers whose representability certifies universality of a
/// weighted sum of generalized pentagonal numbers.
inline constexpr std::array<i64, 12> kJuTargets{1, 3, 8, 9, 11, 18, 19, 25, 27, 43, 98, 109};

struct JuWitness {
    i64 target = 0;
    std::optional<std::vector<i64>> arguments;
};

struct JuResult {
    bool universal = false;
    std::vector<JuWitness> witnesses;
};

JuResult ju_universality_check(std::span<const i64> coefficients);

} // namespace pentasum
