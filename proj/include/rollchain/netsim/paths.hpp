// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <rollchain/netsim/graph.hpp>
#include <rollchain/netsim/rng.hpp>

namespace rollchain::netsim {

//! Hop count of a shortest a-b path, std::nullopt when unreachable.
std::optional<std::size_t> shortest_path_length(const Graph& graph, Vertex a, Vertex b);

inline bool connected(const Graph& graph, Vertex a, Vertex b) {
    return shortest_path_length(graph, a, b).has_value();
}

//! round-half-up(f * edge_count)
std::size_t removal_count(double fraction, std::size_t edge_count) noexcept;

//! Removes exactly removal_count(f, |E|) edges chosen uniformly without replacement.
Graph remove_links(const Graph& graph, double fraction, Engine& rng);

//! A uniformly random order of the edge indices. Removing its first k entries
//! for increasing k gives nested attacks driven by one random stream.
std::vector<std::size_t> removal_order(const Graph& graph, Engine& rng);

Graph remove_first(const Graph& graph, const std::vector<std::size_t>& order, std::size_t k);

}  // namespace rollchain::netsim
