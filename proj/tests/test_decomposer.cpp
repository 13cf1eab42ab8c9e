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
#include <doctest.h>

#include <algorithm>
#include <random>

#include "pentasum/decomposer.hpp"
#include "pentasum/polygonal.hpp"

using namespace pentasum;

namespace {

// Interval endpoints with denominators cleared by hand; independent of ShiftBound.
bool in_interval_112(i128 n, i128 B) {
    const i128 t = 6 * B - 1;
    return t >= 0 && t * t >= 4 * n && 5 * t * t <= 24 * n;
}
bool in_interval_ten(i128 n, i128 B) {  // (2,3,4) and (1,2,6)
    const i128 lo = 16 * B - 1, hi = 6 * B - 1;
    return lo >= 0 && 33 * lo * lo >= 512 * n && 5 * hi * hi <= 12 * n;
}
bool in_interval_123(i128 n, i128 B) {
    const i128 lo = 48 * B - 1, hi = 6 * B - 1;
    return lo >= 0 && lo * lo >= 192 * n && 7 * hi * hi <= 24 * n;
}

i64 md(i128 a, i64 m) {
    const i128 r = a % m;
    return static_cast<i64>(r < 0 ? r + m : r);
}

/// Smallest B in the interval satisfying `ok`, scanning from 0.
template <class In, class Ok>
i64 oracle_shift(i64 n, In in, Ok ok) {
    i64 B = 0;
    while (!in(n, B)) ++B;
    for (; in(n, B); ++B)
        if (ok(B)) return B;
    return -1;
}

i64 oracle_112(i64 n) {
    if (n % 5 != 0) return oracle_shift(n, in_interval_112, [&](i64 B) { return md(B + n, 3) == 0; });
    const i64 q = n / 5;
    for (const i64 delta : {0, 1, -1}) {
        const i64 v = md(1 - q - delta, 5);
        if (v == 0 || v == 2 || v == 3) continue;
        const i64 B = oracle_shift(n, in_interval_112, [&](i64 B) {
            return md(B + n, 3) == 0 && md(static_cast<i128>(B - 1) * (B - 1) - delta, 5) == 0;
        });
        if (B >= 0) return B;
    }
    return -1;
}

i64 oracle_234(i64 n) {
    const i128 N = n;
    if (n % 2 == 1)
        return oracle_shift(n, in_interval_ten, [&](i64 B) { return md(B - (-9 * N * N * N + 12 * N * N - 38 * N), 81) == 0; });
    return oracle_shift(n, in_interval_ten, [&](i64 B) {
        return md(B - (3 * N - 1), 8) == 0 && md(B - (3 * N * N - 2 * N), 9) == 0;
    });
}

i64 oracle_123(i64 n) {
    const i128 N = n;
    return oracle_shift(n, in_interval_123, [&](i64 B) {
        if (md(B - (18 * N * N * N + 3 * N * N - 35 * N), 81) != 0) return false;
        if (n % 7 != 0) return true;
        const i64 v = md(3 * (N / 7) + 1 - static_cast<i128>(B + 1) * (B + 1), 7);
        return v == 3 || v == 5 || v == 6;
    });
}

i64 oracle_126(i64 n) {
    const i128 N = n;
    return oracle_shift(n, in_interval_ten, [&](i64 B) {
        if (md(B - (3 * N * N - 2 * N), 9) != 0 || md(B - (N * N - N - 1), 8) != 0) return false;
        if (n % 5 != 0) return true;
        const i128 n0 = N / 5;
        const i64 sq = md(static_cast<i128>(B - 1) * (B - 1), 5);
        return sq != md(2 * n0 + 1, 5) && sq != md(2 * n0 - 1, 5) && sq != md(2 * n0 - 2, 5);
    });
}

i128 residual(i64 n, i64 B, i64 W) { return (2 * static_cast<i128>(n) + W * B) / 3 - static_cast<i128>(W) * B * B; }

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::internal;
}

long double width(long double u, long double ou, long double l, long double ol, i64 n) {
    return std::sqrt(u * n) + ou - std::sqrt(l * n) - ol;
}

} // namespace

TEST_CASE("(1,1,2) shift selection") {
    const auto s = select_shift_112(9001);
    CHECK(s.B == 32);
    CHECK(s.residual == 934);
    CHECK(oracle_112(9001) == 32);
    CHECK(select_shift_112(8892).B == oracle_112(8892));

    const auto m5 = select_shift_112(222290);
    CHECK(m5.B == oracle_112(222290));
    REQUIRE(m5.delta.has_value());
    CHECK(m5.residual % 2 == 0);
    CHECK(m5.residual > 0);
    CHECK(m5.residual <= static_cast<i64>(m5.B) * m5.B);
    CHECK(m5.residual % 5 == 0);
    const i64 m = (m5.residual / 5) % 5;
    CHECK((m == 1 || m == 4));

    CHECK(code_of([] { select_shift_112(8891); }) == ErrorCode::hypothesis_violation);
    CHECK(code_of([] { select_shift_112(100000); }) == ErrorCode::hypothesis_violation);
}

TEST_CASE("shift selection agrees with the scan oracle") {
    std::mt19937_64 rng(3);
    auto sample = [&](i64 lo, i64 hi) { return lo + static_cast<i64>(rng() % static_cast<u64>(hi - lo)); };
    for (int i = 0; i < 2000; ++i) {
        i64 n = sample(kThreshold112, 1'000'000'000'000);
        if (n % 5 == 0 && n < kThreshold112Mult5) n += 1;
        REQUIRE(select_shift_112(n).B == oracle_112(n));
        const i64 n5 = sample(kThreshold112Mult5 / 5 + 1, 200'000'000'000) * 5;
        REQUIRE(select_shift_112(n5).B == oracle_112(n5));
        const i64 a = sample(kThreshold234, 1'000'000'000'000);
        REQUIRE(select_shift_234(a).B == oracle_234(a));
        const i64 b = sample(kThreshold123, 1'000'000'000'000);
        REQUIRE(select_shift_123(b).B == oracle_123(b));
        const i64 b7 = sample(kThreshold123 / 7 + 1, 100'000'000'000) * 7;
        REQUIRE(select_shift_123(b7).B == oracle_123(b7));
        const i64 c = sample(kThreshold126, 1'000'000'000'000);
        REQUIRE(select_shift_126(c).B == oracle_126(c));
        const i64 c5 = sample(kThreshold126 / 5 + 1, 100'000'000'000) * 5;
        REQUIRE(select_shift_126(c5).B == oracle_126(c5));
    }
}

TEST_CASE("(2,3,4) shift selection at the threshold") {
    const i64 even = 45325138, odd = 45325139;
    const auto se = select_shift_234(even);
    CHECK(se.B == oracle_234(even));
    const i64 qe = se.residual / 6;
    CHECK(se.residual % 6 == 0);
    CHECK(9 * static_cast<i128>(qe) == even + 5 * static_cast<i128>(se.B) - 15 * static_cast<i128>(se.B) * se.B);
    CHECK(qe % 8 == 4);
    const auto so = select_shift_234(odd);
    CHECK(so.B == oracle_234(odd));
    const i64 qo = so.residual / 6;
    CHECK(qo % 2 == 1);
    CHECK(qo % 9 == 0);
    CHECK(code_of([] { select_shift_234(kThreshold234 - 1); }) == ErrorCode::hypothesis_violation);
}

TEST_CASE("(1,2,3) and (1,2,6) shift selection at the thresholds") {
    const auto a = select_shift_123(808834881);
    CHECK(a.B == oracle_123(808834881));
    CHECK(residual(808834881, a.B, 7) == a.residual);
    CHECK((a.residual / 6) % 9 == 0);
    const auto b = select_shift_126(897099189);
    CHECK(b.B == oracle_126(897099189));
    CHECK((b.residual / 6) % 8 != 7);
    CHECK(code_of([] { select_shift_123(kThreshold123 - 1); }) == ErrorCode::hypothesis_violation);
    CHECK(code_of([] { select_shift_126(kThreshold126 - 1); }) == ErrorCode::hypothesis_violation);

    // 7 | n: q/7 must be 1, 2 or 4 mod 7
    const i64 n7 = 808834881 + (7 - 808834881 % 7);
    const auto c = select_shift_123(n7);
    const i64 q = c.residual / 6;
    REQUIRE(q % 7 == 0);
    const i64 r = (q / 7) % 7;
    CHECK((r == 1 || r == 2 || r == 4));
}

TEST_CASE("threshold constants are the ceilings of their formulas") {
    auto ceil_ld = [](long double v) { return static_cast<i64>(std::ceil(v)); };
    const long double s215 = std::sqrt(2.0L / 15), s115 = std::sqrt(1.0L / 15), s233 = std::sqrt(2.0L / 33);
    const long double s221 = std::sqrt(2.0L / 21), s112 = std::sqrt(1.0L / 12);
    CHECK(ceil_ld(9 / ((s215 - 1.0L / 3) * (s215 - 1.0L / 3))) == kThreshold112);
    CHECK(ceil_ld(225 / ((s215 - 1.0L / 3) * (s215 - 1.0L / 3))) == kThreshold112Mult5);
    const long double m234 = 81 - 1.0L / 6 + 1.0L / 16;
    CHECK(ceil_ld(m234 * m234 / ((s115 - s233) * (s115 - s233))) == kThreshold234);
    const long double m123 = 7 * 81 + 1.0L / 48 - 1.0L / 6;
    CHECK(ceil_ld(m123 * m123 / ((s221 - s112) * (s221 - s112))) == kThreshold123);
    const long double m126 = 360 + 1.0L / 16 - 1.0L / 6;
    CHECK(ceil_ld(m126 * m126 / ((s115 - s233) * (s115 - s233))) == kThreshold126);
}

TEST_CASE("interval widths at the thresholds") {
    CHECK(width(2.0L / 15, 0, 1.0L / 9, 0, kThreshold112) >= 3);
    CHECK(width(2.0L / 15, 0, 1.0L / 9, 0, kThreshold112 - 1) < 3);
    CHECK(width(2.0L / 15, 0, 1.0L / 9, 0, kThreshold112Mult5) >= 15);
    CHECK(width(1.0L / 15, 1.0L / 6, 2.0L / 33, 1.0L / 16, kThreshold234) >= 81);
    CHECK(width(1.0L / 15, 1.0L / 6, 2.0L / 33, 1.0L / 16, kThreshold234 - 1) < 81);
    CHECK(width(2.0L / 21, 1.0L / 6, 1.0L / 12, 1.0L / 48, kThreshold123) >= 567);
    CHECK(width(1.0L / 15, 1.0L / 6, 2.0L / 33, 1.0L / 16, kThreshold126) >= 360);
}

TEST_CASE("congruence choices always exist") {
    // some delta in {0, 1, -1} avoids 0, +-2 for every q mod 5
    for (i64 q = 0; q < 5; ++q) {
        bool found = false;
        for (const i64 d : {0, 1, -1}) {
            const i64 v = md(1 - q - d, 5);
            found = found || (v != 0 && v != 2 && v != 3);
        }
        CHECK(found);
    }
    // for every r = 3 n0 + 1 mod 7 some square s^2 gives r - s^2 in {3, 5, 6}
    for (i64 r = 0; r < 7; ++r) {
        bool found = false;
        for (i64 s = 0; s < 7; ++s) {
            const i64 v = md(r - s * s, 7);
            found = found || v == 3 || v == 5 || v == 6;
        }
        CHECK(found);
    }
}

TEST_CASE("reconstruct") {
    const QuaternaryWitness w{1, -1, 0, WitnessKind::half_sum, 2};
    const auto d = reconstruct(1, w, kTriple112);
    CHECK(d.n == 8);
    CHECK(d.index == std::array<i64, 4>{2, 0, 1, 1});
    CHECK(pentagonal(2) + pentagonal(0) + pentagonal(1) + 2 * pentagonal(1) == 8);
    CHECK(certify(d));

    const auto z = reconstruct(0, QuaternaryWitness{0, 0, 0, WitnessKind::form_234, 0}, kTriple234);
    CHECK(z.n == 0);
    CHECK(z.index == std::array<i64, 4>{0, 0, 0, 0});

    CHECK(code_of([&] { reconstruct(0, w, kTriple112); }) == ErrorCode::bound_violation);
    CHECK(code_of([&] { reconstruct(3, w, kTriple234); }) == ErrorCode::domain);
    CHECK(code_of([] { reconstruct(3, QuaternaryWitness{1, 0, 0, WitnessKind::form_123, 5}, kTriple123); }) ==
          ErrorCode::identity_violation);
}

TEST_CASE("reconstruct recovers n from any shift and witness") {
    // p5 sum of the shifted indices equals (2n + W B - W B)/2 = n
    for (i64 B = 0; B <= 6; ++B)
        for (i64 a = -3; a <= 3; ++a)
            for (i64 b = -3; b <= 3; ++b)
                for (i64 c = -2; c <= 2; ++c) {
                    for (auto w : {substitute_234(a, b, c), substitute_123(a, b, c), substitute_126(a, b, c)}) {
                        const auto t = w.kind == WitnessKind::form_234 ? kTriple234
                                       : w.kind == WitnessKind::form_123 ? kTriple123
                                                                         : kTriple126;
                        const i64 m = std::max({std::abs(w.x), std::abs(w.y), std::abs(w.z), std::abs(w.w())});
                        if (m > B) continue;
                        const auto d = reconstruct(B, w, t);
                        const i128 W = t.weight_sum();
                        REQUIRE(2 * static_cast<i128>(d.n) == 3 * (w.target + W * B * B) - W * B);
                        REQUIRE(certify(d));
                    }
                }
}

TEST_CASE("decompose small n") {
    const auto d9 = decompose(9, kTriple112);
    CHECK(d9.method == Method::direct_search);
    CHECK(certify(d9));
    // same multiset as p5(2)+p5(1)+p5(1)+2 p5(1)
    auto first3 = std::array<i64, 3>{d9.index[0], d9.index[1], d9.index[2]};
    std::sort(first3.begin(), first3.end());
    CHECK(first3 == std::array<i64, 3>{1, 1, 2});
    CHECK(d9.index[3] == 1);

    for (const auto& t : {kTriple112, kTriple234, kTriple123, kTriple126}) {
        const auto z = decompose(0, t);
        CHECK(z.index == std::array<i64, 4>{0, 0, 0, 0});
    }
    // slots 0..2 share weight 1, so any of them carries the single p5(1)
    const auto one = direct_search(1, kTriple112);
    CHECK(one.index[0] + one.index[1] + one.index[2] == 1);
    CHECK(one.index[3] == 0);
    CHECK(certify(direct_search(8891, kTriple112)));
}

TEST_CASE("decompose 9001 constructively") {
    const auto d = decompose(9001, kTriple112, {MethodChoice::constructive});
    CHECK(d.method == Method::constructive);
    REQUIRE(d.shift.has_value());
    CHECK(d.shift->B == 32);
    CHECK(d.shift->residual == 934);
    CHECK(certify(d));
}

TEST_CASE("decompose dispatch and errors") {
    CHECK(decompose(8891, kTriple112).method == Method::direct_search);
    CHECK(decompose(8892, kTriple112).method == Method::constructive);
    CHECK(decompose(100000, kTriple112).method == Method::direct_search);  // 5 | n below 222289
    CHECK(decompose(222290, kTriple112).method == Method::constructive);
    CHECK(decompose(kThreshold234, kTriple234).method == Method::constructive);
    CHECK(decompose(kThreshold234 - 1, kTriple234).method == Method::direct_search);
    CHECK(decompose(kThreshold123, kTriple123).method == Method::constructive);
    CHECK(decompose(kThreshold126, kTriple126).method == Method::constructive);
    CHECK(decompose(kThreshold126 - 1, kTriple126).method == Method::direct_search);
    CHECK(code_of([] { decompose(10, CoefficientTriple{1, 2, 2}); }) == ErrorCode::unsupported_triple);
    CHECK(code_of([] { decompose(100, kTriple112, {MethodChoice::constructive}); }) == ErrorCode::hypothesis_violation);
    CHECK(code_of([] { decompose(-1, kTriple112); }) == ErrorCode::domain);
    CHECK(code_of([] { decompose(kMaxInput + 1, kTriple112); }) == ErrorCode::overflow);
    CHECK(code_of([] { direct_search(1'000'000, kTriple112, 1); }) == ErrorCode::search_cap_exceeded);
}

TEST_CASE("direct search reports counterexamples") {
    // 4 = 1 + 1 + 1 + 1 needs a weight-1 slot repeated
    CHECK(code_of([] { direct_search(4, CoefficientTriple{10, 10, 10}); }) == ErrorCode::not_representable);
}

TEST_CASE("constructive path over a stretch above the (1,1,2) threshold") {
    for (i64 n = kThreshold112; n <= 20000; ++n) {
        if (n % 5 == 0) continue;
        const auto d = decompose(n, kTriple112, {MethodChoice::constructive});
        REQUIRE(certify(d));
        REQUIRE(d.n == n);
    }
}

TEST_CASE("largest supported inputs") {
    for (const auto& t : {kTriple112, kTriple234, kTriple123, kTriple126}) {
        for (const i64 n : {kMaxInput, kMaxInput - 1, kMaxInput - 7}) {
            const auto d = decompose(n, t);
            CHECK(d.method == Method::constructive);
            CHECK(certify(d));
        }
    }
}

TEST_CASE("certify") {
    Decomposition d = decompose(9, kTriple112);
    CHECK(certify(d));
    d.index[0] += 1;
    CHECK_FALSE(certify(d));
    CHECK_FALSE(certify(1, kTriple112, {-1, 1, 0, 0}));  // p5(-1) = 2 is generalized only
    CHECK(certify(0, kTriple126, {0, 0, 0, 0}));
}

TEST_CASE("candidate triples") {
    CHECK(candidate_triples().size() == 15);
    CHECK(std::count_if(candidate_triples().begin(), candidate_triples().end(), is_constructive_triple) == 4);
}
