// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <rollchain/netsim/paths.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace rollchain::netsim {

std::optional<std::size_t> shortest_path_length(const Graph& graph, Vertex a, Vertex b) {
    const auto n = graph.node_count();
    if (a >= n || b >= n) throw std::out_of_range{"endpoint outside graph"};
    if (a == b) return 0;

    const auto adj = graph.adjacency();
    std::vector<std::size_t> dist(n, SIZE_MAX);
    std::queue<Vertex> frontier;
    dist[a] = 0;
    frontier.push(a);
    while (!frontier.empty()) {
        const auto u = frontier.front();
        frontier.pop();
        for (auto v : adj[u]) {
            if (dist[v] != SIZE_MAX) continue;
            dist[v] = dist[u] + 1;
            if (v == b) return dist[v];
            frontier.push(v);
        }
    }
    return std::nullopt;
}

std::size_t removal_count(double fraction, std::size_t edge_count) noexcept {
    const double f = std::clamp(fraction, 0.0, 1.0);
    return std::min(edge_count, static_cast<std::size_t>(std::floor(f * static_cast<double>(edge_count) + 0.5)));
}

std::vector<std::size_t> removal_order(const Graph& graph, Engine& rng) {
    std::vector<std::size_t> order(graph.edge_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        std::uniform_int_distribution<std::size_t> pick{i, order.size() - 1};
        std::swap(order[i], order[pick(rng)]);
    }
    return order;
}

Graph remove_first(const Graph& graph, const std::vector<std::size_t>& order, std::size_t k) {
    if (order.size() != graph.edge_count() || k > order.size()) {
        throw std::invalid_argument{"removal order does not match graph"};
    }
    std::vector<bool> removed(graph.edge_count(), false);
    for (std::size_t i = 0; i < k; ++i) removed[order[i]] = true;

    std::vector<Edge> kept;
    kept.reserve(graph.edge_count() - k);
    for (std::size_t i = 0; i < graph.edge_count(); ++i) {
        if (!removed[i]) kept.push_back(graph.edges()[i]);
    }
    return graph.with_edges(kept);
}

Graph remove_links(const Graph& graph, double fraction, Engine& rng) {
    if (!(fraction >= 0.0 && fraction <= 1.0)) {
        throw std::invalid_argument{"removal fraction must lie in [0, 1]"};
    }
    const auto k = removal_count(fraction, graph.edge_count());
    // Partial Fisher-Yates: the first k slots become a uniform k-subset.
    std::vector<std::size_t> order(graph.edge_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick{i, order.size() - 1};
        std::swap(order[i], order[pick(rng)]);
    }
    return remove_first(graph, order, k);
}

}  // namespace rollchain::netsim
