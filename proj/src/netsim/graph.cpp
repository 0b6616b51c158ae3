// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <rollchain/netsim/graph.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

#include <rollchain/netsim/errors.hpp>

namespace rollchain::netsim {

std::string_view to_string(NetsimErrc code) noexcept {
    switch (code) {
        case NetsimErrc::kLTooLarge:
            return "LTooLarge";
        case NetsimErrc::kDegenerateArea:
            return "DegenerateArea";
        case NetsimErrc::kConfigError:
            return "ConfigError";
        case NetsimErrc::kTooLargeToEnumerate:
            return "TooLargeToEnumerate";
    }
    return "Unknown";
}

Graph Graph::complete(std::size_t n) {
    Graph g{n};
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

Graph Graph::ring(std::size_t n) {
    Graph g = path(n);
    if (n > 2) g.add_edge(0, static_cast<Vertex>(n - 1));
    return g;
}

Graph Graph::path(std::size_t n) {
    Graph g{n};
    for (Vertex u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

bool Graph::add_edge(Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument{"self-loop on vertex " + std::to_string(u)};
    if (u >= node_count_ || v >= node_count_) {
        throw std::out_of_range{"edge {" + std::to_string(u) + ", " + std::to_string(v) + "} outside " +
                                std::to_string(node_count_) + " vertices"};
    }
    if (u > v) std::swap(u, v);
    if (!index_.insert(key(u, v)).second) return false;
    edges_.push_back({u, v});
    return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
    if (u == v || u >= node_count_ || v >= node_count_) return false;
    if (u > v) std::swap(u, v);
    return index_.contains(key(u, v));
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
    std::vector<std::vector<Vertex>> adj(node_count_);
    for (const auto& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& list : adj) std::ranges::sort(list);
    return adj;
}

Graph Graph::with_edges(const std::vector<Edge>& edges) const {
    Graph g{node_count_};
    g.positions = positions;
    g.kinds = kinds;
    for (const auto& e : edges) g.add_edge(e.u, e.v);
    return g;
}

Edge edge_from_index(std::uint64_t k, std::size_t n) {
    if (k >= max_edges(n)) throw std::out_of_range{"edge index " + std::to_string(k) + " out of range"};
    Vertex u = 0;
    std::uint64_t row = n - 1;
    while (k >= row) {
        k -= row;
        --row;
        ++u;
    }
    return {u, static_cast<Vertex>(u + 1 + k)};
}

}  // namespace rollchain::netsim
