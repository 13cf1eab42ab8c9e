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

#include "pentasum/ternary_forms.hpp"

namespace pentasum {

std::string DiagonalForm::name() const {
    return std::to_string(alpha) + "," + std::to_string(beta) + "," + std::to_string(gamma);
}

std::optional<TernaryRepresentation> represent(const DiagonalForm& form, i64 q,
                                               const SearchOptions& options) {
    if (form.alpha <= 0 || form.beta <= 0 || form.gamma <= 0)
        throw Error(ErrorCode::domain, "form coefficients must be positive: " + form.name());
    if (q < 0) throw Error(ErrorCode::domain, "cannot represent negative " + std::to_string(q));

    std::optional<std::uint64_t> cap = options.max_steps;
    if (!cap && q > kExhaustiveLimit) cap = kDefaultStepBudget;

    std::uint64_t steps = 0;
    for (i64 c = isqrt(q / form.gamma); c >= 0; --c) {
        const i128 after_c = static_cast<i128>(q) - static_cast<i128>(form.gamma) * c * c;
        i128 rest = after_c;
        for (i64 b = 0; rest >= 0; ++b) {
            if (cap && ++steps > *cap)
                throw Error(ErrorCode::search_cap_exceeded,
                            "representing " + std::to_string(q) + " by (" + form.name() + ") after " +
                                std::to_string(*cap) + " steps");
            if (rest % form.alpha == 0) {
                if (const auto a = exact_sqrt(static_cast<u128>(rest / form.alpha))) {
                    TernaryRepresentation rep{static_cast<i64>(*a), b, c, form, q};
                    if (!rep.holds())
                        throw Error(ErrorCode::internal, "representation identity failed for " + std::to_string(q));
                    return rep;
                }
            }
            // rest(b+1) = rest(b) - beta (2b + 1)
            rest -= static_cast<i128>(form.beta) * (2 * static_cast<i128>(b) + 1);
        }
    }
    return std::nullopt;
}

bool dickson_excluded(i64 q) {
    if (q < 0) throw Error(ErrorCode::domain, "dickson_excluded of negative " + std::to_string(q));
    if (q == 0) return false;
    if (q % 8 == 7) return true;
    i64 l = q;
    const int e = strip_factor(l, 5);
    const i64 r = l % 5;
    return e % 2 == 1 && (r == 1 || r == 4);
}

bool is_4k_16l_plus_6(i64 q) {
    if (q <= 0) return false;
    while (q % 4 == 0) q /= 4;
    return q % 16 == 6;
}

bool is_squarefree(i64 q) {
    if (q <= 0) return false;
    const i64 n = q;
    for (i64 p = 2; static_cast<i128>(p) * p * p <= n; ++p) {
        if (q % p != 0) continue;
        q /= p;
        if (q % p == 0) return false;
    }
    // Every prime factor left exceeds cbrt(n), so at most two remain.
    return q == 1 || !exact_sqrt(static_cast<u64>(q));
}

bool ramanujan_form_guaranteed(i64 q) {
    if (q < 0) return false;
    if (q % 2 == 1) return !is_squarefree(q);
    return !is_4k_16l_plus_6(q);
}

namespace {

/// q = 7^(2k+1) l with 7 not dividing l and l = 3, 5, 6 (mod 7)
bool in_seven_adic_exclusion(i64 q) {
    if (q <= 0) return false;
    i64 l = q;
    const int e = strip_factor(l, 7);
    const i64 r = l % 7;
    return e % 2 == 1 && (r == 3 || r == 5 || r == 6);
}

} // namespace

bool form_117_guaranteed(i64 q) {
    if (q < 0) return false;
    return q % 9 == 0 && !in_seven_adic_exclusion(q);
}

PredicateVerdict predicate_verdict(const DiagonalForm& form, i64 q) {
    PredicateVerdict v;
    if (form == kDicksonForm) {
        v.has_predicate = true;
        if (q % 8 == 7) {
            v.excluded = true;
            v.reason = "8m+7";
        } else if (dickson_excluded(q)) {
            v.excluded = true;
            v.reason = "5^(2k+1)*l, l=+-1 (mod 5)";
        } else {
            v.guaranteed = true;
            v.reason = "outside Dickson exceptional set";
        }
    } else if (form == kRamanujanForm) {
        v.has_predicate = true;
        v.guaranteed = ramanujan_form_guaranteed(q);
        v.reason = v.guaranteed ? (q % 2 == 1 ? "odd and not squarefree" : "even and not 4^k(16l+6)")
                                : "outside the guaranteed set (undecided)";
    } else if (form == kForm117) {
        v.has_predicate = true;
        if (in_seven_adic_exclusion(q)) {
            v.excluded = true;
            v.reason = "7^(2k+1)*l, l=3,5,6 (mod 7)";
        } else {
            v.guaranteed = form_117_guaranteed(q);
            v.reason = v.guaranteed ? "multiple of 9 outside 7-adic exceptional set"
                                    : "not a multiple of 9 (undecided)";
        }
    }
    return v;
}

TernaryRepresentation represent_guaranteed(const DiagonalForm& form, i64 q, const SearchOptions& options) {
    if (auto rep = represent(form, q, options)) return *rep;
    const auto verdict = predicate_verdict(form, q);
    throw Error(ErrorCode::predicate_violation,
                "no representation of " + std::to_string(q) + " by (" + form.name() + ")" +
                    (verdict.guaranteed ? " although the predicate guarantees one (" + verdict.reason + ")" : ""));
}

} // namespace pentasum
