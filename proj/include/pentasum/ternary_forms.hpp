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

/// @file ternary_forms.hpp
/// Representations by diagonal ternary forms a*x^2 + b*y^2 + c*z^2 and the
/// classical exceptional-set predicates for x^2+2y^2+10z^2, x^2+y^2+10z^2
/// and x^2+y^2+7z^2.
///
/// Search order is fixed so results are reproducible: the z coordinate (the
/// largest coefficient) runs downward from its maximum, y runs upward from 0,
/// and x is recovered with an exact square test. Returned coordinates are
/// nonnegative.

#include <cstdint>
#include <optional>
#include <string>

#include "pentasum/arith.hpp"

namespace pentasum {

struct DiagonalForm {
    i64 alpha = 1;
    i64 beta = 1;
    i64 gamma = 1;

    friend constexpr bool operator==(const DiagonalForm&, const DiagonalForm&) = default;

    constexpr i128 evaluate(i64 a, i64 b, i64 c) const {
        return static_cast<i128>(alpha) * a * a + static_cast<i128>(beta) * b * b +
               static_cast<i128>(gamma) * c * c;
    }

    std::string name() const;
};

/// x^2 + 2y^2 + 10z^2
inline constexpr DiagonalForm kDicksonForm{1, 2, 10};
/// x^2 + y^2 + 10z^2
inline constexpr DiagonalForm kRamanujanForm{1, 1, 10};
/// x^2 + y^2 + 7z^2
inline constexpr DiagonalForm kForm117{1, 1, 7};

struct TernaryRepresentation {
    i64 a = 0;
    i64 b = 0;
    i64 c = 0;
    DiagonalForm form;
    i64 target = 0;

    bool holds() const { return form.evaluate(a, b, c) == target; }
};

/// Elementary-step cap for a single search. Unset means: exhaustive up to
/// kExhaustiveLimit, kDefaultStepBudget steps above it.
struct SearchOptions {
    std::optional<std::uint64_t> max_steps;
};

inline constexpr i64 kExhaustiveLimit = 100'000'000;
inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000'000;

/// First representation of q in canonical order, or nullopt when exhaustive
/// search proves there is none. Throws search_cap_exceeded when a cap stops
/// the search early.
std::optional<TernaryRepresentation> represent(const DiagonalForm& form, i64 q,
                                               const SearchOptions& options = {});

/// True iff q is NOT of the form x^2+2y^2+10z^2:
/// q = 7 (mod 8), or q = 5^(2k+1) l with l = +-1 (mod 5).
bool dickson_excluded(i64 q);

/// q = 4^k (16l + 6) for some k, l >= 0.
bool is_4k_16l_plus_6(i64 q);

/// No square of a prime divides q. Trial division to cbrt(q), then the
/// cofactor is squarefree unless it is itself a square.
bool is_squarefree(i64 q);

/// Sufficient condition under which x^2+y^2+10z^2 represents q:
/// q odd and not squarefree, or q even and not 4^k(16l+6).
bool ramanujan_form_guaranteed(i64 q);

/// Sufficient condition under which x^2+y^2+7z^2 represents q:
/// 9 | q and q is not 7^(2k+1) l with l = 3, 5, 6 (mod 7).
bool form_117_guaranteed(i64 q);

/// Whether one of the predicates above decides representability for `form`,
/// and if so which verdict it gives for q. `reason` names the deciding set.
struct PredicateVerdict {
    bool has_predicate = false;
    bool guaranteed = false;  ///< predicate promises a representation
    bool excluded = false;    ///< predicate proves there is none
    std::string reason;
};

PredicateVerdict predicate_verdict(const DiagonalForm& form, i64 q);

/// represent(), but a missing representation where the predicate promised one
/// becomes a predicate_violation error.
TernaryRepresentation represent_guaranteed(const DiagonalForm& form, i64 q,
                                           const SearchOptions& options = {});

} // namespace pentasum
