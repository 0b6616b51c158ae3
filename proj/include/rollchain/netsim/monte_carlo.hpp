// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include <rollchain/netsim/generators.hpp>

namespace rollchain::netsim {

struct Estimate {
    std::size_t trials{0};
    std::size_t successes{0};
    double p_hat{0.0};
    double std_error{0.0};  // sqrt(p_hat (1 - p_hat) / trials)
};

Estimate make_estimate(std::size_t successes, std::size_t trials);

//! Runs body(trial_index) for every trial on up to `threads` workers. Trials are
//! split into contiguous blocks; results must be written to per-trial slots.
void for_each_trial(std::size_t trials, unsigned threads, const std::function<void(std::size_t)>& body);

//! Probability that vertices 0 and n-1 are connected in a random graph with L
//! edges. Trial i draws from derive_seed(seed, {i}), so the result does not
//! depend on `threads`.
Estimate mc_path_probability(std::size_t n, std::uint64_t edge_count, std::size_t trials, std::uint64_t seed,
                             unsigned threads = 1, GraphModel model = GraphModel::kExactEdges);

}  // namespace rollchain::netsim
