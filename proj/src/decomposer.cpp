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

#include "pentasum/decomposer.hpp"

#include <algorithm>
#include <cmath>

#include "pentasum/polygonal.hpp"

namespace pentasum {

std::string CoefficientTriple::name() const {
    return std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d);
}

std::span<const CoefficientTriple> candidate_triples() {
    static constexpr std::array<CoefficientTriple, 15> kTriples{{
        {1, 1, 2}, {1, 2, 2}, {1, 2, 3}, {1, 2, 4}, {1, 2, 5},
        {1, 2, 6}, {1, 3, 6}, {2, 2, 4}, {2, 2, 6}, {2, 3, 4},
        {2, 3, 5}, {2, 3, 7}, {2, 4, 6}, {2, 4, 7}, {2, 4, 8},
    }};
    return kTriples;
}

bool is_constructive_triple(const CoefficientTriple& t) {
    return t == kTriple112 || t == kTriple234 || t == kTriple123 || t == kTriple126;
}

bool constructive_applicable(i64 n, const CoefficientTriple& t) {
    if (t == kTriple112) return n >= kThreshold112 && (n % 5 != 0 || n >= kThreshold112Mult5);
    if (t == kTriple234) return n >= kThreshold234;
    if (t == kTriple123) return n >= kThreshold123;
    if (t == kTriple126) return n >= kThreshold126;
    return false;
}

// ---------------------------------------------------------------------------
// Interval endpoints

bool ShiftBound::at_most(i64 B, i64 n) const {
    // sqrt(p n / q) + r / s <= B  <=>  sB - r >= 0 and q (sB - r)^2 >= s^2 p n
    const i128 lhs = static_cast<i128>(offset_den) * B - offset_num;
    if (lhs < 0) return false;
    return radicand_den * lhs * lhs >= static_cast<i128>(offset_den) * offset_den * radicand_num * n;
}

bool ShiftBound::at_least(i64 B, i64 n) const {
    const i128 lhs = static_cast<i128>(offset_den) * B - offset_num;
    if (lhs < 0) return true;
    return radicand_den * lhs * lhs <= static_cast<i128>(offset_den) * offset_den * radicand_num * n;
}

long double ShiftBound::approx(i64 n) const {
    return std::sqrt(static_cast<long double>(radicand_num) * n / radicand_den) +
           static_cast<long double>(offset_num) / offset_den;
}

std::string ShiftBound::describe() const {
    return "sqrt(" + std::to_string(radicand_num) + "n/" + std::to_string(radicand_den) + ")+" +
           std::to_string(offset_num) + "/" + std::to_string(offset_den);
}

bool Congruence::admits(i64 B) const {
    const i64 r = mod(B, modulus);
    return std::find(residues.begin(), residues.end(), r) != residues.end();
}

// ---------------------------------------------------------------------------
// Shift selection

namespace {

constexpr ShiftBound kLower112{1, 9, 1, 6};     // sqrt(n)/3 + 1/6
constexpr ShiftBound kUpper112{2, 15, 1, 6};    // sqrt(2n/15) + 1/6
constexpr ShiftBound kLowerTen{2, 33, 1, 16};   // sqrt(2n/33) + 1/16
constexpr ShiftBound kUpperTen{1, 15, 1, 6};    // sqrt(n/15) + 1/6
constexpr ShiftBound kLower123{1, 12, 1, 48};   // sqrt(n/12) + 1/48
constexpr ShiftBound kUpper123{2, 21, 1, 6};    // sqrt(2n/21) + 1/6

void require_range(i64 n, i64 threshold, const char* what) {
    if (n < threshold)
        throw Error(ErrorCode::hypothesis_violation,
                    std::string(what) + " needs n >= " + std::to_string(threshold) + ", got " + std::to_string(n));
    if (n > kMaxInput) throw Error(ErrorCode::overflow, std::to_string(n) + " exceeds supported input range");
}

std::optional<i64> scan(i64 n, const ShiftBound& lower, const ShiftBound& upper,
                        const std::vector<Congruence>& congruences) {
    i64 B = std::max<i64>(0, static_cast<i64>(lower.approx(n)) - 2);
    while (!lower.at_most(B, n)) ++B;
    for (; upper.at_least(B, n); ++B) {
        if (std::all_of(congruences.begin(), congruences.end(), [B](const Congruence& c) { return c.admits(B); }))
            return B;
    }
    return std::nullopt;
}

/// (2n + W B)/3 - W B^2, which must be integral.
i64 residual_of(i64 n, i64 B, i64 weight) {
    const i128 num = 2 * static_cast<i128>(n) + static_cast<i128>(weight) * B;
    if (num % 3 != 0)
        throw Error(ErrorCode::internal, "2n + " + std::to_string(weight) + "B not divisible by 3 (n=" +
                                             std::to_string(n) + ", B=" + std::to_string(B) + ")");
    return narrow(num / 3 - static_cast<i128>(weight) * B * B, "residual");
}

[[noreturn]] void side_condition_failed(const std::string& what, i64 n, i64 B) {
    throw Error(ErrorCode::internal,
                "shift side condition failed: " + what + " (n=" + std::to_string(n) + ", B=" + std::to_string(B) + ")");
}

void check_residual_window(const ShiftSelection& s, i64 n, bool inclusive_square) {
    const i128 B = s.B;
    if (s.residual <= 0) side_condition_failed("residual > 0", n, s.B);
    if (inclusive_square ? s.residual > B * B : s.residual >= (B + 1) * (B + 1))
        side_condition_failed(inclusive_square ? "residual <= B^2" : "residual < (B+1)^2", n, s.B);
}

/// Residue set of B mod 5 with (B - 1)^2 = delta (mod 5).
std::vector<i64> shift_residues_for_delta(int delta) {
    std::vector<i64> out;
    for (i64 B = 0; B < 5; ++B)
        if (mod((B - 1) * (B - 1), 5) == mod(static_cast<i64>(delta), 5)) out.push_back(B);
    return out;
}

Congruence single(i64 modulus, i64 residue) { return {modulus, {mod(residue, modulus)}}; }

} // namespace

ShiftSelection select_shift_112(i64 n) {
    require_range(n, kThreshold112, "(1,1,2) shift selection");
    if (n % 5 == 0 && n < kThreshold112Mult5)
        throw Error(ErrorCode::hypothesis_violation,
                    "(1,1,2) shift selection with 5 | n needs n >= " + std::to_string(kThreshold112Mult5));

    ShiftSelection sel;
    sel.lower = kLower112;
    sel.upper = kUpper112;
    const Congruence mod3 = single(3, -n);

    if (n % 5 != 0) {
        sel.congruences = {mod3};
        const auto B = scan(n, sel.lower, sel.upper, sel.congruences);
        if (!B) throw Error(ErrorCode::no_valid_shift, "(1,1,2), n=" + std::to_string(n));
        sel.B = *B;
        sel.residual = residual_of(n, sel.B, 5);
        check_residual_window(sel, n, true);
        if (sel.residual % 2 != 0) side_condition_failed("residual even", n, sel.B);
        if (sel.residual % 5 == 0) side_condition_failed("5 does not divide residual", n, sel.B);
        return sel;
    }

    const i64 q = n / 5;
    for (const int delta : {0, 1, -1}) {
        const i64 v = mod(1 - q - delta, 5);
        if (v == 0 || v == 2 || v == 3) continue;
        sel.congruences = {mod3, Congruence{5, shift_residues_for_delta(delta)}};
        const auto B = scan(n, sel.lower, sel.upper, sel.congruences);
        if (!B) continue;
        sel.B = *B;
        sel.delta = delta;
        sel.residual = residual_of(n, sel.B, 5);
        check_residual_window(sel, n, true);
        if (sel.residual % 2 != 0) side_condition_failed("residual even", n, sel.B);
        // residual = 5 m with m = 1 - q - delta (mod 5), so m = +-1 (mod 5)
        const i64 m = sel.residual / 5;
        if (sel.residual % 5 != 0 || m % 5 == 0 || m % 5 == 2 || m % 5 == 3)
            side_condition_failed("residual/5 = +-1 (mod 5)", n, sel.B);
        return sel;
    }
    throw Error(ErrorCode::no_valid_shift, "(1,1,2), 5 | n, n=" + std::to_string(n));
}

ShiftSelection select_shift_234(i64 n) {
    require_range(n, kThreshold234, "(2,3,4) shift selection");
    ShiftSelection sel;
    sel.lower = kLowerTen;
    sel.upper = kUpperTen;
    const i64 m81 = n % 81;
    const i64 m9 = n % 9;
    const i64 m8 = n % 8;
    if (n % 2 == 1) {
        sel.congruences = {single(81, -9 * m81 * m81 * m81 + 12 * m81 * m81 - 38 * m81)};
    } else {
        const i64 r8 = mod(3 * m8 - 1, 8);
        const i64 r9 = mod(3 * m9 * m9 - 2 * m9, 9);
        sel.congruences = {single(72, crt_pair(r8, 8, r9, 9))};
    }
    const auto B = scan(n, sel.lower, sel.upper, sel.congruences);
    if (!B) throw Error(ErrorCode::no_valid_shift, "(2,3,4), n=" + std::to_string(n));
    sel.B = *B;
    sel.residual = residual_of(n, sel.B, 10);
    check_residual_window(sel, n, false);
    if (sel.residual % 6 != 0) side_condition_failed("6 | residual", n, sel.B);
    const i64 q = sel.residual / 6;
    if (n % 2 == 1) {
        if (q % 2 == 0 || q % 9 != 0) side_condition_failed("q odd and 9 | q", n, sel.B);
    } else if (q % 8 != 4) {
        side_condition_failed("q = 4 (mod 8)", n, sel.B);
    }
    return sel;
}

ShiftSelection select_shift_123(i64 n) {
    require_range(n, kThreshold123, "(1,2,3) shift selection");
    ShiftSelection sel;
    sel.lower = kLower123;
    sel.upper = kUpper123;
    const i64 m81 = n % 81;
    sel.congruences = {single(81, 18 * m81 * m81 * m81 + 3 * m81 * m81 - 35 * m81)};
    if (n % 7 == 0) {
        const i64 n0 = (n / 7) % 7;
        Congruence c7{7, {}};
        for (i64 B = 0; B < 7; ++B) {
            const i64 v = mod(3 * n0 + 1 - (B + 1) * (B + 1), 7);
            if (v == 3 || v == 5 || v == 6) c7.residues.push_back(B);
        }
        sel.congruences.push_back(std::move(c7));
    }
    const auto B = scan(n, sel.lower, sel.upper, sel.congruences);
    if (!B) throw Error(ErrorCode::no_valid_shift, "(1,2,3), n=" + std::to_string(n));
    sel.B = *B;
    sel.residual = residual_of(n, sel.B, 7);
    check_residual_window(sel, n, false);
    if (sel.residual % 6 != 0) side_condition_failed("6 | residual", n, sel.B);
    const i64 q = sel.residual / 6;
    if (q % 9 != 0) side_condition_failed("9 | q", n, sel.B);
    if (n % 7 == 0) {
        const i64 r = q % 7 == 0 ? (q / 7) % 7 : -1;
        if (r != 1 && r != 2 && r != 4) side_condition_failed("q/7 = 1, 2, 4 (mod 7)", n, sel.B);
    }
    return sel;
}

ShiftSelection select_shift_126(i64 n) {
    require_range(n, kThreshold126, "(1,2,6) shift selection");
    ShiftSelection sel;
    sel.lower = kLowerTen;
    sel.upper = kUpperTen;
    const i64 m9 = n % 9;
    const i64 m8 = n % 8;
    const i64 r9 = mod(3 * m9 * m9 - 2 * m9, 9);
    const i64 r8 = mod(m8 * m8 - m8 - 1, 8);
    sel.congruences = {single(72, crt_pair(r8, 8, r9, 9))};
    if (n % 5 == 0) {
        const i64 n0 = (n / 5) % 5;
        const std::array<i64, 3> forbidden{mod(2 * n0 + 1, 5), mod(2 * n0 - 1, 5), mod(2 * n0 - 2, 5)};
        Congruence c5{5, {}};
        for (i64 B = 0; B < 5; ++B) {
            const i64 sq = mod((B - 1) * (B - 1), 5);
            if (std::find(forbidden.begin(), forbidden.end(), sq) == forbidden.end()) c5.residues.push_back(B);
        }
        sel.congruences.push_back(std::move(c5));
    }
    const auto B = scan(n, sel.lower, sel.upper, sel.congruences);
    if (!B) throw Error(ErrorCode::no_valid_shift, "(1,2,6), n=" + std::to_string(n));
    sel.B = *B;
    sel.residual = residual_of(n, sel.B, 10);
    check_residual_window(sel, n, false);
    if (sel.residual % 6 != 0) side_condition_failed("6 | residual", n, sel.B);
    const i64 q = sel.residual / 6;
    if (q % 8 == 7) side_condition_failed("q != 7 (mod 8)", n, sel.B);
    if (n % 5 == 0) {
        const i64 r = q % 5 == 0 ? (q / 5) % 5 : 0;
        if (r == 0 || r == 1 || r == 4) side_condition_failed("q/5 != 0, +-1 (mod 5)", n, sel.B);
    }
    return sel;
}

ShiftSelection select_shift(i64 n, const CoefficientTriple& t) {
    if (t == kTriple112) return select_shift_112(n);
    if (t == kTriple234) return select_shift_234(n);
    if (t == kTriple123) return select_shift_123(n);
    if (t == kTriple126) return select_shift_126(n);
    throw Error(ErrorCode::unsupported_triple, "no constructive path for (" + t.name() + ")");
}

// ---------------------------------------------------------------------------
// Reconstruction and certification

namespace {

WitnessKind kind_for(const CoefficientTriple& t) {
    if (t == kTriple112) return WitnessKind::half_sum;
    if (t == kTriple234) return WitnessKind::form_234;
    if (t == kTriple123) return WitnessKind::form_123;
    if (t == kTriple126) return WitnessKind::form_126;
    throw Error(ErrorCode::unsupported_triple, "no constructive path for (" + t.name() + ")");
}

} // namespace

bool certify(i64 n, const CoefficientTriple& t, const std::array<i64, 4>& index) {
    const auto weights = t.weights();
    i128 sum = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        if (index[i] < 0) return false;
        const i128 k = index[i];
        sum += static_cast<i128>(weights[i]) * (k * (3 * k - 1) / 2);
    }
    return sum == n;
}

bool certify(const Decomposition& d) { return certify(d.n, d.triple, d.index); }

Decomposition reconstruct(i64 B, const QuaternaryWitness& witness, const CoefficientTriple& t) {
    if (B < 0) throw Error(ErrorCode::domain, "shift must be >= 0");
    if (kind_for(t) != witness.kind)
        throw Error(ErrorCode::domain, std::string("witness kind ") + std::string(to_string(witness.kind)) +
                                           " does not match triple (" + t.name() + ")");
    if (!witness.holds()) throw Error(ErrorCode::identity_violation, "witness does not satisfy its identity");

    const i64 w = witness.w();
    // The half-sum form carries its double weight on w; the others on the first slot.
    const std::array<i64, 4> unshifted = witness.kind == WitnessKind::half_sum
                                             ? std::array<i64, 4>{witness.x, witness.y, witness.z, w}
                                             : std::array<i64, 4>{w, witness.x, witness.y, witness.z};
    for (const i64 v : unshifted)
        if (v > B || v < -B)
            throw Error(ErrorCode::bound_violation,
                        "witness entry " + std::to_string(v) + " exceeds shift B=" + std::to_string(B));

    // R = (2n + W B)/3 - W B^2  =>  n = (3 (R + W B^2) - W B) / 2
    const i128 W = t.weight_sum();
    const i128 twice_n = 3 * (static_cast<i128>(witness.target) + W * B * B) - W * B;
    if (twice_n % 2 != 0) throw Error(ErrorCode::identity_violation, "witness and shift give a non-integral n");

    Decomposition d;
    d.triple = t;
    d.n = narrow(twice_n / 2, "n");
    d.method = Method::constructive;
    d.witness = witness;
    for (std::size_t i = 0; i < 4; ++i) d.index[i] = unshifted[i] + B;
    if (!certify(d))
        throw Error(ErrorCode::identity_violation, "shifted witness does not certify n=" + std::to_string(d.n));
    return d;
}

// ---------------------------------------------------------------------------
// Direct search

i64 max_pentagonal_index(i64 v) {
    if (v < 0) throw Error(ErrorCode::domain, "max_pentagonal_index of negative value");
    // 6k - 1 <= sqrt(24v + 1)
    i64 k = static_cast<i64>((isqrt(static_cast<u128>(v) * 24 + 1) + 1) / 6);
    while (pentagonal(k) > v) --k;
    while (pentagonal(k + 1) <= v) ++k;
    return k;
}

Decomposition direct_search(i64 n, const CoefficientTriple& t, std::optional<std::uint64_t> probe_budget) {
    if (n < 0) throw Error(ErrorCode::domain, "n must be >= 0");
    if (t.b <= 0 || t.c <= 0 || t.d <= 0) throw Error(ErrorCode::domain, "weights must be positive");
    std::uint64_t probes = 0;
    for (i64 k3 = max_pentagonal_index(n / t.d); k3 >= 0; --k3) {
        const i64 r3 = n - t.d * pentagonal(k3);
        for (i64 k2 = max_pentagonal_index(r3 / t.c); k2 >= 0; --k2) {
            const i64 r2 = r3 - t.c * pentagonal(k2);
            for (i64 k1 = max_pentagonal_index(r2 / t.b); k1 >= 0; --k1) {
                if (probe_budget && ++probes > *probe_budget)
                    throw Error(ErrorCode::search_cap_exceeded,
                                "direct search for n=" + std::to_string(n) + " exceeded " +
                                    std::to_string(*probe_budget) + " probes");
                const i64 r1 = r2 - t.b * pentagonal(k1);
                if (const auto k0 = pentagonal_index(r1)) {
                    Decomposition d;
                    d.triple = t;
                    d.n = n;
                    d.index = {*k0, k1, k2, k3};
                    d.method = Method::direct_search;
                    if (!certify(d)) throw Error(ErrorCode::internal, "direct search produced a bad witness");
                    return d;
                }
            }
        }
    }
    throw Error(ErrorCode::not_representable,
                "counterexample: " + std::to_string(n) + " is not p5(w)+" + std::to_string(t.b) + "p5(x)+" +
                    std::to_string(t.c) + "p5(y)+" + std::to_string(t.d) + "p5(z) with w,x,y,z >= 0");
}

// ---------------------------------------------------------------------------

namespace {

Decomposition constructive(i64 n, const CoefficientTriple& t, const SearchOptions& search) {
    ShiftSelection sel = select_shift(n, t);
    QuaternaryWitness witness;
    if (t == kTriple112) {
        witness = half_sum_transform(sel.residual, search);
    } else {
        const i64 q = sel.residual / 6;
        if (t == kTriple234) witness = transform_234(q, search);
        else if (t == kTriple123) witness = transform_123(q, search);
        else witness = transform_126(q, search);
    }
    Decomposition d = reconstruct(sel.B, witness, t);
    if (d.n != n)
        throw Error(ErrorCode::internal, "reconstruction gave n=" + std::to_string(d.n) + ", expected " + std::to_string(n));
    d.shift = std::move(sel);
    return d;
}

} // namespace

Decomposition decompose(i64 n, const CoefficientTriple& t, const DecomposeOptions& options) {
    if (n < 0) throw Error(ErrorCode::domain, "n must be >= 0, got " + std::to_string(n));
    if (n > kMaxInput) throw Error(ErrorCode::overflow, std::to_string(n) + " exceeds supported input range");
    if (!is_constructive_triple(t))
        throw Error(ErrorCode::unsupported_triple, "(" + t.name() + ") is not one of (1,1,2), (2,3,4), (1,2,3), (1,2,6)");

    switch (options.method) {
    case MethodChoice::constructive: return constructive(n, t, options.ternary_search);
    case MethodChoice::search: return direct_search(n, t, options.probe_budget);
    case MethodChoice::automatic: break;
    }
    if (constructive_applicable(n, t)) return constructive(n, t, options.ternary_search);
    return direct_search(n, t, options.probe_budget);
}

} // namespace pentasum
