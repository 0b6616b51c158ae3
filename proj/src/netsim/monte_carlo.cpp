// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <rollchain/netsim/monte_carlo.hpp>

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include <rollchain/netsim/errors.hpp>
#include <rollchain/netsim/paths.hpp>

namespace rollchain::netsim {

Estimate make_estimate(std::size_t successes, std::size_t trials) {
    Estimate e;
    e.trials = trials;
    e.successes = successes;
    if (trials > 0) {
        e.p_hat = static_cast<double>(successes) / static_cast<double>(trials);
        e.std_error = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(trials));
    }
    return e;
}

void for_each_trial(std::size_t trials, unsigned threads, const std::function<void(std::size_t)>& body) {
    const auto workers = static_cast<std::size_t>(std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(trials, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < trials; ++i) body(i);
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const auto chunk = (trials + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const auto begin = w * chunk;
            const auto end = std::min(trials, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back([&, begin, end] {
                try {
                    for (std::size_t i = begin; i < end; ++i) body(i);
                } catch (...) {
                    std::lock_guard lock{failure_mutex};
                    if (!failure) failure = std::current_exception();
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

Estimate mc_path_probability(std::size_t n, std::uint64_t edge_count, std::size_t trials, std::uint64_t seed,
                             unsigned threads, GraphModel model) {
    if (trials == 0) throw NetsimError{NetsimErrc::kConfigError, "trials must be at least 1"};
    if (n == 0) throw NetsimError{NetsimErrc::kConfigError, "graph needs at least one node"};
    if (edge_count > max_edges(n)) {
        throw NetsimError{NetsimErrc::kLTooLarge, "L = " + std::to_string(edge_count) +
                                                      " exceeds Lmax = n(n-1)/2 = " + std::to_string(max_edges(n))};
    }

    std::vector<std::uint8_t> hit(trials, 0);
    const auto b = static_cast<Vertex>(n - 1);
    for_each_trial(trials, threads, [&](std::size_t i) {
        auto rng = make_engine(derive_seed(seed, {i}));
        const auto g = gen_graph(model, n, edge_count, rng);
        hit[i] = connected(g, 0, b) ? 1 : 0;
    });

    std::size_t successes = 0;
    for (auto h : hit) successes += h;
    return make_estimate(successes, trials);
}

}  // namespace rollchain::netsim
