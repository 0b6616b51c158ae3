// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <atomic>
#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include <rollchain/netsim/errors.hpp>
#include <rollchain/netsim/exact.hpp>
#include <rollchain/netsim/graph.hpp>
#include <rollchain/netsim/monte_carlo.hpp>

namespace rollchain::netsim {
namespace {

// Independent oracle: walk every subset of the Lmax possible edges and test
// 0 ~ n-1 with a union-find.
std::pair<std::uint64_t, std::uint64_t> subset_oracle(std::size_t n, std::uint64_t l) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < static_cast<int>(n); ++u) {
        for (int v = u + 1; v < static_cast<int>(n); ++v) pairs.emplace_back(u, v);
    }
    std::uint64_t hit = 0;
    std::uint64_t total = 0;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        if (static_cast<std::uint64_t>(__builtin_popcount(mask)) != l) continue;
        ++total;
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (mask >> k & 1u) parent[find(pairs[k].first)] = find(pairs[k].second);
        }
        hit += find(0) == find(static_cast<int>(n) - 1);
    }
    return {hit, total};
}

TEST(BruteForce, SmallValues) {
    const auto one = brute_force_path_probability(3, 1);
    EXPECT_EQ(one.connected, 1u);
    EXPECT_EQ(one.total, 3u);
    EXPECT_DOUBLE_EQ(brute_force_path_probability(3, 2).value(), 1.0);
    EXPECT_EQ(brute_force_path_probability(5, 4).total, 210u);
}

TEST(BruteForce, MatchesSubsetOracle) {
    for (std::size_t n = 2; n <= 6; ++n) {
        for (std::uint64_t l = 0; l <= max_edges(n); ++l) {
            const auto [hit, total] = subset_oracle(n, l);
            const auto got = brute_force_path_probability(n, l);
            EXPECT_EQ(got.connected, hit) << "n=" << n << " L=" << l;
            EXPECT_EQ(got.total, total) << "n=" << n << " L=" << l;
        }
    }
}

TEST(BruteForce, NondecreasingInL) {
    for (std::size_t n = 2; n <= kMaxEnumerableNodes; ++n) {
        auto prev = brute_force_path_probability(n, 0);
        for (std::uint64_t l = 1; l <= max_edges(n); ++l) {
            const auto v = brute_force_path_probability(n, l);
            // prev.connected / prev.total <= v.connected / v.total, cross-multiplied.
            EXPECT_LE(prev.connected * v.total, v.connected * prev.total) << "n=" << n << " L=" << l;
            prev = v;
        }
        EXPECT_EQ(prev.connected, prev.total);
    }
}

TEST(BruteForce, Limits) {
    EXPECT_THROW((void)brute_force_path_probability(8, 3), NetsimError);
    EXPECT_THROW((void)brute_force_path_probability(4, 7), NetsimError);
    EXPECT_EQ(binomial(10, 4), 210u);
    EXPECT_EQ(binomial(45, 22), 4116715363800ull);
}

TEST(MonteCarlo, CompleteGraphIsCertain) {
    const auto e = mc_path_probability(10, 45, 2000, 1);
    EXPECT_EQ(e.p_hat, 1.0);
    EXPECT_EQ(e.std_error, 0.0);
    EXPECT_EQ(e.trials, 2000u);
}

TEST(MonteCarlo, SingleEdgeRate) {
    const auto e = mc_path_probability(10, 1, 20000, 2);
    EXPECT_NEAR(e.p_hat, 1.0 / 45.0, 3 * std::sqrt((1.0 / 45) * (44.0 / 45) / 20000));
}

TEST(MonteCarlo, StandardError) {
    const auto e = make_estimate(25, 100);
    EXPECT_DOUBLE_EQ(e.p_hat, 0.25);
    EXPECT_DOUBLE_EQ(e.std_error, std::sqrt(0.25 * 0.75 / 100));
}

TEST(MonteCarlo, AgreesWithExactForSixNodes) {
    for (std::uint64_t l = 1; l <= 15; ++l) {
        const auto exact = brute_force_path_probability(6, l).value();
        const auto e = mc_path_probability(6, l, 10000, 100 + l);
        // Binomial sd at the exact value avoids a zero-width band when p_hat hits 0 or 1.
        const double sd = std::sqrt(exact * (1 - exact) / 10000);
        EXPECT_LE(std::abs(e.p_hat - exact), 3 * sd + 1e-12) << "L=" << l;
    }
}

TEST(MonteCarlo, ThreadCountDoesNotChangeResult) {
    for (unsigned threads : {2u, 3u, 8u}) {
        const auto a = mc_path_probability(9, 12, 3001, 77, 1);
        const auto b = mc_path_probability(9, 12, 3001, 77, threads);
        EXPECT_EQ(a.successes, b.successes) << threads;
    }
}

TEST(MonteCarlo, BernoulliModelRuns) {
    const auto e = mc_path_probability(6, 15, 500, 3, 1, GraphModel::kBernoulli);
    EXPECT_EQ(e.p_hat, 1.0);
}

TEST(ForEachTrial, VisitsEveryIndexOnce) {
    std::vector<std::atomic<int>> hits(1000);
    for_each_trial(hits.size(), 4, [&](std::size_t i) { hits[i].fetch_add(1); });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
}

}  // namespace
}  // namespace rollchain::netsim
