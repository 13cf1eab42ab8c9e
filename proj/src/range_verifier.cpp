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

#include "pentasum/range_verifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "pentasum/bit_array.hpp"

namespace pentasum {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kShiftCap = 4096;
constexpr double kRecheckWorkLimit = 5e7;

struct Slot {
    i64 weight = 1;
    std::vector<i64> values;  // weight * p5(x) <= N, ascending, distinct
};

std::vector<i64> scaled_values(i64 weight, i64 N, bool generalized) {
    std::vector<i64> v = generalized ? generalized_pentagonals_upto(N / weight) : pentagonal_values_upto(N / weight);
    for (auto& x : v) x *= weight;
    return v;
}

/// Runs f(i) for i in [0, count) on up to `workers` threads; rethrows the first failure.
template <class F>
void parallel_for(std::size_t count, unsigned workers, F&& f) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) {
        pool.emplace_back([&] {
            try {
                for (std::size_t i; (i = next.fetch_add(1)) < count;) f(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count);
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

struct ChunkPlan {
    std::uint64_t words = 0;
    std::uint64_t per_chunk = 0;
    std::size_t count = 0;

    std::uint64_t lo(std::size_t i) const { return i * per_chunk; }
    std::uint64_t hi(std::size_t i) const { return std::min(words, (i + 1) * per_chunk); }
};

ChunkPlan plan_chunks(i64 N, std::uint64_t chunk_bits) {
    ChunkPlan p;
    p.words = static_cast<std::uint64_t>(N) / 64 + 1;
    p.per_chunk = chunk_bits == 0 ? p.words : std::max<std::uint64_t>(1, chunk_bits / 64);
    p.count = static_cast<std::size_t>((p.words + p.per_chunk - 1) / p.per_chunk);
    return p;
}

/// Processes chunks in batches of `workers`, handing each batch's gaps to
/// `emit` in ascending order.
template <class F>
void run_chunks(const ChunkPlan& plan, unsigned workers, F&& chunk_gaps, const std::function<void(i64)>& emit) {
    const std::size_t batch = std::max(1u, workers);
    std::vector<std::vector<i64>> found(batch);
    for (std::size_t first = 0; first < plan.count; first += batch) {
        const std::size_t n = std::min(batch, plan.count - first);
        parallel_for(n, workers, [&](std::size_t k) { found[k] = chunk_gaps(first + k); });
        for (std::size_t k = 0; k < n; ++k) {
            for (const i64 g : found[k]) emit(g);
            found[k].clear();
        }
    }
}

void charge(std::size_t& used, std::size_t bytes, std::size_t budget, const char* what) {
    used += bytes;
    if (used > budget)
        throw Error(ErrorCode::resource_limit, std::string(what) + " needs " + std::to_string(used) +
                                                   " bytes, budget is " + std::to_string(budget));
}

/// Zero bits of `words` in [lo, hi), as integers <= N.
void collect_zero_bits(std::span<const std::uint64_t> words, std::uint64_t lo, std::uint64_t hi, i64 N,
                       std::vector<i64>& out) {
    for (std::uint64_t j = lo; j < hi; ++j) {
        std::uint64_t w = ~words[j];
        while (w != 0) {
            const auto n = static_cast<i64>(j * 64 + static_cast<unsigned>(std::countr_zero(w)));
            if (n > N) return;
            out.push_back(n);
            w &= w - 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Layered sieve

void layered(const std::vector<Slot>& slots, i64 N, const VerifyOptions& opt, VerificationReport& report,
             const std::function<void(i64)>& emit) {
    const auto bits = static_cast<std::uint64_t>(N) + 1;
    const ChunkPlan plan = plan_chunks(N, opt.chunk_bits);
    std::size_t used = 0;
    for (const auto& s : slots) used += s.values.size() * sizeof(i64);
    charge(used, plan.words * 8, opt.memory_budget, "layered sieve");
    if (slots.size() > 1) charge(used, plan.words * 8, opt.memory_budget, "layered sieve");
    report.memory_peak = used;

    BitArray acc(bits);
    for (const i64 v : slots[0].values) acc.set(static_cast<std::uint64_t>(v));

    for (std::size_t layer = 1; layer < slots.size(); ++layer) {
        BitArray next(bits);
        const auto& values = slots[layer].values;
        auto fill = [&](std::size_t c) {
            const auto lo = plan.lo(c), hi = plan.hi(c);
            for (const i64 v : values) {
                if (static_cast<std::uint64_t>(v) >= hi * 64) break;
                next.or_shifted(acc, static_cast<std::uint64_t>(v), lo, hi);
            }
        };
        if (layer + 1 < slots.size()) {
            parallel_for(plan.count, opt.workers, fill);
            acc = std::move(next);
            continue;
        }
        run_chunks(
            plan, opt.workers,
            [&](std::size_t c) {
                fill(c);
                std::vector<i64> gaps;
                collect_zero_bits(next.words(), plan.lo(c), plan.hi(c), N, gaps);
                return gaps;
            },
            emit);
        return;
    }
    // single coefficient: the seed is the answer
    run_chunks(
        plan, opt.workers,
        [&](std::size_t c) {
            std::vector<i64> gaps;
            collect_zero_bits(acc.words(), plan.lo(c), plan.hi(c), N, gaps);
            return gaps;
        },
        emit);
}

// ---------------------------------------------------------------------------
// Pair-table sieve

/// Enumerates sums of one value from each probe slot that are <= limit.
/// Stops early and returns false once more than `cap` sums are produced.
bool probe_sums(const std::vector<Slot>& slots, std::size_t first, i64 limit, std::size_t cap, std::vector<i64>& out,
                i64 partial = 0) {
    if (first == slots.size()) {
        out.push_back(partial);
        return out.size() <= cap;
    }
    for (const i64 v : slots[first].values) {
        if (partial + v > limit) break;
        if (!probe_sums(slots, first + 1, limit, cap, out, partial + v)) return false;
    }
    return true;
}

/// Some probe sum s <= n has n - s in the pair table. Largest weights first.
bool covered(const BitArray& table, const std::vector<Slot>& slots, std::size_t slot, i64 rest) {
    if (slot < 2) return table.test(static_cast<std::uint64_t>(rest));
    const auto& values = slots[slot].values;
    auto it = std::upper_bound(values.begin(), values.end(), rest);
    while (it != values.begin()) {
        --it;
        if (covered(table, slots, slot - 1, rest - *it)) return true;
    }
    return false;
}

double pair_count(const Slot& a, const Slot& b, i64 N) {
    double n = 0;
    for (const i64 v : a.values) n += static_cast<double>(std::upper_bound(b.values.begin(), b.values.end(), N - v) - b.values.begin());
    return n;
}

std::vector<i64> small_probe_sums(const std::vector<Slot>& slots, i64 N) {
    std::vector<i64> sums;
    for (i64 limit = N;; limit /= 2) {
        sums.clear();
        if (probe_sums(slots, 2, limit, kShiftCap, sums) || limit == 0) break;
    }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return sums;
}

void pair_table(const std::vector<Slot>& slots, i64 N, const VerifyOptions& opt, VerificationReport& report,
                const std::function<void(i64)>& emit) {
    const auto bits = static_cast<std::uint64_t>(N) + 1;
    const ChunkPlan plan = plan_chunks(N, opt.chunk_bits);
    const std::vector<i64> shifts = small_probe_sums(slots, N);

    std::size_t used = 0;
    for (const auto& s : slots) used += s.values.size() * sizeof(i64);
    used += shifts.size() * sizeof(i64);
    charge(used, plan.words * 8, opt.memory_budget, "pair table");
    charge(used, std::min<std::size_t>(opt.workers, plan.count) * plan.per_chunk * 8, opt.memory_budget,
           "pair-table chunk buffers");
    report.memory_peak = used;

    BitArray table(bits);
    for (const i64 a : slots[0].values) {
        for (const i64 b : slots[1].values) {
            if (a + b > N) break;
            table.set(static_cast<std::uint64_t>(a + b));
        }
    }

    run_chunks(
        plan, opt.workers,
        [&](std::size_t c) {
            const auto lo = plan.lo(c), hi = plan.hi(c);
            std::vector<std::uint64_t> open(hi - lo, ~std::uint64_t{0});
            const std::uint64_t top = static_cast<std::uint64_t>(N) + 1;  // first bit past N
            if (hi * 64 > top) {
                for (std::uint64_t j = lo; j < hi; ++j) {
                    const std::uint64_t base = j * 64;
                    if (base >= top) open[j - lo] = 0;
                    else if (top - base < 64) open[j - lo] &= (std::uint64_t{1} << (top - base)) - 1;
                }
            }
            auto remaining = [&] {
                std::uint64_t n = 0;
                for (const auto w : open) n += static_cast<std::uint64_t>(std::popcount(w));
                return n;
            };
            std::uint64_t left = remaining();
            const std::uint64_t switch_at = (hi - lo) / 2;
            for (std::size_t i = 0; i < shifts.size() && left > switch_at; ++i) {
                const auto s = static_cast<std::uint64_t>(shifts[i]);
                if (s >= hi * 64) break;
                for (std::uint64_t j = lo; j < hi; ++j) open[j - lo] &= ~table.shifted_word(j, s);
                if (i % 8 == 7) left = remaining();
            }
            std::vector<i64> gaps;
            for (std::uint64_t j = lo; j < hi; ++j) {
                for (std::uint64_t w = open[j - lo]; w != 0; w &= w - 1) {
                    const auto n = static_cast<i64>(j * 64 + static_cast<unsigned>(std::countr_zero(w)));
                    if (!covered(table, slots, slots.size() - 1, n)) gaps.push_back(n);
                }
            }
            return gaps;
        },
        emit);
}

SieveStrategy choose(const std::vector<Slot>& slots, i64 N) {
    if (slots.size() < 2) return SieveStrategy::layered;
    const double words = static_cast<double>(N) / 64 + 1;
    double layered_cost = 0;
    for (std::size_t i = 1; i < slots.size(); ++i) layered_cost += static_cast<double>(slots[i].values.size()) * words;
    double probe_count = 1;
    for (std::size_t i = 2; i < slots.size(); ++i) probe_count *= static_cast<double>(slots[i].values.size());
    double pair_cost = pair_count(slots[0], slots[1], N) + words * std::min(probe_count, 64.0);
    if (pair_cost >= layered_cost) return SieveStrategy::layered;

    // Leftover n are probed one at a time, which is ruinous when gaps are
    // dense; estimate their density from a short layered prefix.
    const i64 M = std::min<i64>(N, i64{1} << 16);
    std::vector<Slot> pilot;
    for (const auto& s : slots) {
        Slot t{s.weight, {}};
        for (const i64 v : s.values) {
            if (v > M) break;
            t.values.push_back(v);
        }
        pilot.push_back(std::move(t));
    }
    VerifyOptions quiet;
    quiet.chunk_bits = 0;
    VerificationReport scratch;
    std::size_t gaps = 0;
    layered(pilot, M, quiet, scratch, [&](i64) { ++gaps; });
    pair_cost += static_cast<double>(gaps) / static_cast<double>(M + 1) * static_cast<double>(N) * probe_count;
    return pair_cost < layered_cost ? SieveStrategy::pair_table : SieveStrategy::layered;
}

void recheck(const VerificationReport& report, const std::vector<Slot>& slots, std::size_t samples,
             std::uint64_t seed, std::size_t& done) {
    if (samples == 0) return;
    std::mt19937_64 rng(seed);
    std::vector<std::pair<i64, bool>> picks;  // (n, is_gap)
    if (!report.gaps.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, report.gaps.size() - 1);
        for (std::size_t i = 0; i < samples; ++i) picks.emplace_back(report.gaps[pick(rng)], true);
    }
    std::uniform_int_distribution<i64> any(0, report.bound);
    for (std::size_t i = 0; i < samples; ++i) {
        const i64 n = any(rng);
        if (!std::binary_search(report.gaps.begin(), report.gaps.end(), n)) picks.emplace_back(n, false);
    }
    for (const auto& [n, is_gap] : picks) {
        double work = 1;
        for (std::size_t i = 1; i < slots.size(); ++i) {
            const auto& v = slots[i].values;
            work *= static_cast<double>(std::upper_bound(v.begin(), v.end(), n) - v.begin());
        }
        if (work > kRecheckWorkLimit) continue;
        const bool representable = find_representation(n, report.coefficients, report.generalized).has_value();
        if (representable == is_gap)
            throw Error(ErrorCode::internal, "sieve and direct search disagree at n=" + std::to_string(n));
        ++done;
    }
}

} // namespace

VerificationReport verify_range(std::span<const i64> coefficients, i64 N, const VerifyOptions& options) {
    if (coefficients.empty()) throw Error(ErrorCode::domain, "at least one coefficient is required");
    if (N < 0) throw Error(ErrorCode::domain, "bound must be >= 0");
    for (const i64 a : coefficients)
        if (a <= 0) throw Error(ErrorCode::domain, "coefficients must be positive");
    if (static_cast<std::uint64_t>(N) / 8 > options.memory_budget)
        throw Error(ErrorCode::resource_limit, "bound " + std::to_string(N) + " does not fit the memory budget");

    const auto start = Clock::now();
    VerificationReport report;
    report.coefficients.assign(coefficients.begin(), coefficients.end());
    report.bound = N;
    report.generalized = options.generalized;
    report.checked = N + 1;

    std::vector<Slot> slots;
    for (const i64 a : coefficients) slots.push_back({a, scaled_values(a, N, options.generalized)});
    std::stable_sort(slots.begin(), slots.end(), [](const Slot& x, const Slot& y) { return x.weight < y.weight; });

    report.strategy = options.strategy == SieveStrategy::automatic ? choose(slots, N) : options.strategy;
    if (slots.size() < 2) report.strategy = SieveStrategy::layered;

    const std::function<void(i64)> emit = [&](i64 g) {
        report.gaps.push_back(g);
        if (options.on_gap) options.on_gap(g);
    };
    if (report.strategy == SieveStrategy::pair_table) pair_table(slots, N, options, report, emit);
    else layered(slots, N, options, report, emit);

    recheck(report, slots, options.recheck_samples, options.recheck_seed, report.rechecked);
    report.elapsed = Clock::now() - start;
    report.complete = true;
    return report;
}

std::vector<i64> three_pentagonal_gaps(i64 N, const VerifyOptions& options) {
    constexpr std::array<i64, 3> ones{1, 1, 1};
    return verify_range(ones, N, options).gaps;
}

std::vector<std::pair<CoefficientTriple, VerificationReport>> verify_candidate_triples(i64 N, const VerifyOptions& options) {
    std::vector<std::pair<CoefficientTriple, VerificationReport>> out;
    for (const auto& t : candidate_triples()) {
        const std::array<i64, 4> weights = t.weights();
        out.emplace_back(t, verify_range(weights, N, options));
    }
    return out;
}

bool proven_universal(std::span<const i64> coefficients) {
    std::vector<i64> w(coefficients.begin(), coefficients.end());
    std::sort(w.begin(), w.end());
    static const std::array<std::array<i64, 4>, 6> kProven{{
        {1, 1, 1, 2}, {1, 1, 2, 3}, {1, 1, 2, 6}, {1, 2, 3, 4}, {1, 1, 2, 2}, {1, 1, 2, 4},
    }};
    return std::any_of(kProven.begin(), kProven.end(),
                       [&](const auto& p) { return std::equal(w.begin(), w.end(), p.begin(), p.end()); });
}

namespace {

struct Candidate {
    i64 value;
    i64 argument;
};

bool search_slots(i64 rest, std::span<const i64> weights, const std::vector<std::vector<Candidate>>& lists,
                  std::size_t slot, bool generalized, std::vector<i64>& args) {
    if (slot == 0) {
        if (rest % weights[0] != 0) return false;
        const i64 v = rest / weights[0];
        const auto k = generalized ? generalized_pentagonal_argument(v) : pentagonal_index(v);
        if (!k) return false;
        args[0] = *k;
        return true;
    }
    const auto& list = lists[slot];
    for (auto it = list.rbegin(); it != list.rend(); ++it) {
        if (it->value > rest) continue;
        args[slot] = it->argument;
        if (search_slots(rest - it->value, weights, lists, slot - 1, generalized, args)) return true;
    }
    return false;
}

} // namespace

std::optional<std::vector<i64>> find_representation(i64 n, std::span<const i64> coefficients, bool generalized) {
    if (coefficients.empty() || n < 0) return std::nullopt;
    std::vector<std::vector<Candidate>> lists(coefficients.size());
    for (std::size_t i = 1; i < coefficients.size(); ++i) {
        const i64 a = coefficients[i];
        if (a <= 0) throw Error(ErrorCode::domain, "coefficients must be positive");
        for (i64 k = 0;; ++k) {
            const i64 p = pentagonal(k);
            if (a * p > n) break;
            lists[i].push_back({a * p, k});
            if (generalized && k > 0) {
                const i64 q = pentagonal(-k);
                if (a * q <= n) lists[i].push_back({a * q, -k});
            }
        }
        std::sort(lists[i].begin(), lists[i].end(), [](const Candidate& x, const Candidate& y) { return x.value < y.value; });
    }
    std::vector<i64> args(coefficients.size(), 0);
    if (search_slots(n, coefficients, lists, coefficients.size() - 1, generalized, args)) return args;
    return std::nullopt;
}

JuResult ju_universality_check(std::span<const i64> coefficients) {
    JuResult result;
    result.universal = true;
    for (const i64 t : kJuTargets) {
        JuWitness w{t, find_representation(t, coefficients, true)};
        result.universal = result.universal && w.arguments.has_value();
        result.witnesses.push_back(std::move(w));
    }
    return result;
}

} // namespace pentasum
