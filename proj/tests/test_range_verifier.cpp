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
#include <vector>

#include "pentasum/decomposer.hpp"
#include "pentasum/range_verifier.hpp"

using namespace pentasum;

namespace {

// Brute-force nested loops over explicit value lists.
std::vector<i64> naive_gaps(const std::vector<i64>& coeffs, i64 N, bool generalized) {
    std::vector<i64> values;
    for (i64 k = 0;; ++k) {
        const i64 a = k * (3 * k - 1) / 2, b = k * (3 * k + 1) / 2;
        if (a > N) break;
        values.push_back(a);
        if (generalized && k > 0 && b <= N) values.push_back(b);
    }
    std::sort(values.begin(), values.end());
    std::vector<char> hit(N + 1, 0);
    auto rec = [&](auto&& self, std::size_t i, i64 sum) -> void {
        if (i == coeffs.size()) {
            hit[sum] = 1;
            return;
        }
        for (const i64 v : values) {
            const i64 s = sum + coeffs[i] * v;
            if (s > N) break;
            self(self, i + 1, s);
        }
    };
    rec(rec, 0, 0);
    std::vector<i64> gaps;
    for (i64 n = 0; n <= N; ++n)
        if (!hit[n]) gaps.push_back(n);
    return gaps;
}

std::vector<i64> gaps_of(std::vector<i64> coeffs, i64 N, VerifyOptions o = {}) {
    return verify_range(coeffs, N, o).gaps;
}

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::internal;
}

const std::vector<std::vector<i64>> kLists{
    {1, 1, 1}, {1, 1, 1, 2}, {1, 2, 3, 4}, {1, 1, 2, 6}, {1, 1, 2, 3}, {1, 3, 7, 9},
    {2, 5, 7, 11}, {4, 1, 3}, {1, 1}, {3}, {1, 2, 2, 5, 9}};

} // namespace

TEST_CASE("sieves match the brute-force oracle") {
    for (const auto& c : kLists)
        for (const bool gen : {false, true}) {
            const i64 N = c.size() >= 4 ? 10000 : 4000;
            const auto expected = naive_gaps(c, N, gen);
            for (const auto s : {SieveStrategy::layered, SieveStrategy::pair_table, SieveStrategy::automatic}) {
                if (s == SieveStrategy::pair_table && c.size() < 3) continue;
                VerifyOptions o;
                o.generalized = gen;
                o.strategy = s;
                const auto r = verify_range(c, N, o);
                INFO("list size " << c.size() << " gen " << gen << " strategy " << to_string(s));
                REQUIRE(r.gaps == expected);
                CHECK(r.complete);
                CHECK(r.checked == N + 1);
            }
        }
}

TEST_CASE("prefix stability") {
    for (const auto& c : kLists) {
        const auto big = gaps_of(c, 20000);
        for (const i64 N0 : {0, 1, 63, 64, 65, 1000, 12345}) {
            std::vector<i64> cut;
            std::copy_if(big.begin(), big.end(), std::back_inserter(cut), [&](i64 g) { return g <= N0; });
            REQUIRE(gaps_of(c, N0) == cut);
        }
    }
}

TEST_CASE("chunked and threaded runs equal the monolithic run") {
    for (const auto& c : kLists)
        for (const auto s : {SieveStrategy::layered, SieveStrategy::pair_table}) {
            if (s == SieveStrategy::pair_table && c.size() < 3) continue;
            VerifyOptions mono;
            mono.strategy = s;
            mono.chunk_bits = 0;
            const auto ref = gaps_of(c, 50000, mono);
            for (const std::uint64_t bits : {64u, 192u, 4096u, 1u << 14}) {
                for (const unsigned workers : {1u, 3u}) {
                    VerifyOptions o = mono;
                    o.chunk_bits = bits;
                    o.workers = workers;
                    std::vector<i64> streamed;
                    o.on_gap = [&](i64 g) { streamed.push_back(g); };
                    const auto got = gaps_of(c, 50000, o);
                    REQUIRE(got == ref);
                    REQUIRE(streamed == ref);
                }
            }
        }
}

TEST_CASE("verified prefixes") {
    CHECK(gaps_of({1, 1, 1, 2}, 8891).empty());
    CHECK(gaps_of({1, 2, 3, 4}, 1'000'000).empty());
    CHECK(gaps_of({1, 1, 2, 6}, 1'000'000).empty());
    CHECK(gaps_of({1, 1, 2, 3}, 1'000'000).empty());
    CHECK(gaps_of({1, 1, 1, 2}, 1'000'000).empty());
}

TEST_CASE("three pentagonal numbers") {
    CHECK(three_pentagonal_gaps(0).empty());
    const auto small = three_pentagonal_gaps(12);
    CHECK(std::find(small.begin(), small.end(), 4) != small.end());
    CHECK(small == std::vector<i64>{4, 8, 9});

    const auto g = three_pentagonal_gaps(100000);
    REQUIRE(!g.empty());
    CHECK(g.back() == 33066);
    CHECK(g.size() == 210);
    CHECK(std::vector<i64>(g.begin(), g.begin() + 5) == std::vector<i64>{4, 8, 9, 16, 19});

    // a gap for three equal weights, but not for (1, 1, 2)
    const auto g3 = gaps_of({1, 1, 1}, 33066);
    CHECK(g3.back() == 33066);
    const auto g112 = gaps_of({1, 1, 2}, 33066);
    CHECK(std::find(g112.begin(), g112.end(), 33066) == g112.end());
    const std::vector<i64> w{1, 1, 2};
    const auto rep = find_representation(33066, w, false);
    REQUIRE(rep.has_value());
    CHECK(pentagonal((*rep)[0]) + pentagonal((*rep)[1]) + 2 * pentagonal((*rep)[2]) == 33066);
}

TEST_CASE("reported gaps survive an independent search") {
    const std::vector<i64> c{1, 3, 7, 9};
    const auto r = verify_range(c, 3000, {});
    REQUIRE(!r.gaps.empty());
    for (const i64 g : r.gaps)
        CHECK(code_of([&] { direct_search(g, CoefficientTriple{3, 7, 9}); }) == ErrorCode::not_representable);
    std::size_t gi = 0;
    for (i64 n = 0; n <= 3000; ++n) {
        if (gi < r.gaps.size() && r.gaps[gi] == n) {
            ++gi;
            continue;
        }
        REQUIRE(certify(direct_search(n, CoefficientTriple{3, 7, 9})));
    }
    CHECK(r.rechecked > 0);
}

TEST_CASE("the fifteen candidate triples") {
    const auto all = verify_candidate_triples(10000);
    CHECK(all.size() == 15);
    for (const auto& [t, r] : all) {
        INFO(t.name());
        CHECK(r.gaps.empty());
        CHECK(r.coefficients == std::vector<i64>{1, t.b, t.c, t.d});
    }
}

TEST_CASE("proven universality list") {
    CHECK(proven_universal(std::vector<i64>{2, 1, 1, 1}));
    CHECK(proven_universal(std::vector<i64>{1, 2, 3, 4}));
    CHECK_FALSE(proven_universal(std::vector<i64>{1, 1, 1}));
    CHECK_FALSE(proven_universal(std::vector<i64>{1, 2, 2, 3}));
}

TEST_CASE("Ju's twelve numbers") {
    auto check_witnesses = [](const std::vector<i64>& c, const JuResult& r) {
        REQUIRE(r.witnesses.size() == 12);
        for (const auto& w : r.witnesses) {
            if (!w.arguments) continue;
            i64 s = 0;
            for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * pentagonal((*w.arguments)[i]);
            CHECK(s == w.target);
        }
    };
    const std::vector<i64> a{1, 1, 2};
    const auto ra = ju_universality_check(a);
    CHECK(ra.universal);
    check_witnesses(a, ra);
    for (const auto& w : ra.witnesses) CHECK(w.arguments.has_value());

    const std::vector<i64> one{1};
    const auto r1 = ju_universality_check(one);
    CHECK_FALSE(r1.universal);
    check_witnesses(one, r1);
    CHECK(r1.witnesses[1].target == 3);
    CHECK_FALSE(r1.witnesses[1].arguments.has_value());

    const std::vector<i64> b{1, 2, 3, 4};
    CHECK(ju_universality_check(b).universal);
    for (const auto& t : candidate_triples()) {
        const std::vector<i64> c{1, t.b, t.c, t.d};
        const auto r = ju_universality_check(c);
        CHECK(r.universal);
        check_witnesses(c, r);
    }
}

TEST_CASE("limits and errors") {
    VerifyOptions tiny;
    tiny.memory_budget = 1 << 20;
    CHECK(code_of([&] { verify_range(std::vector<i64>{1, 1, 1, 2}, 1'000'000'000, tiny); }) == ErrorCode::resource_limit);
    CHECK(code_of([] { verify_range(std::vector<i64>{1, 1}, -1); }) == ErrorCode::domain);
    CHECK(code_of([] { verify_range(std::vector<i64>{}, 10); }) == ErrorCode::domain);
    CHECK(code_of([] { verify_range(std::vector<i64>{1, 0}, 10); }) == ErrorCode::domain);
    const auto r = verify_range(std::vector<i64>{1, 1, 1, 2}, 100000);
    CHECK(r.memory_peak > 0);
    CHECK(r.memory_peak < (std::size_t{64} << 20));
}

TEST_CASE("automatic strategy avoids per-n probing when gaps are dense") {
    const auto dense = verify_range(std::vector<i64>{1, 5, 5, 5}, 1'000'000);
    CHECK(dense.strategy == SieveStrategy::layered);
    CHECK(dense.gaps.size() == 400011);
    CHECK(verify_range(std::vector<i64>{1, 2, 3, 4}, 1'000'000).strategy == SieveStrategy::pair_table);
}
