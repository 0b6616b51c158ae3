// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

namespace rollchain::netsim {

using Vertex = std::uint32_t;

//! Unordered pair stored with u < v.
struct Edge {
    Vertex u{0};
    Vertex v{0};

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Point {
    double x{0.0};
    double y{0.0};

    friend bool operator==(const Point&, const Point&) = default;
};

enum class NodeKind { kFixed, kMobile };

//! Lmax = n(n-1)/2.
constexpr std::uint64_t max_edges(std::uint64_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

//! Simple undirected graph on vertices 0..n-1. Edges keep insertion order.
class Graph {
  public:
    Graph() = default;
    explicit Graph(std::size_t node_count) : node_count_{node_count} {}

    static Graph complete(std::size_t n);
    static Graph ring(std::size_t n);
    static Graph path(std::size_t n);

    //! Adds {u, v}; returns false if it is already present. Throws on a self-loop
    //! or an out-of-range vertex.
    bool add_edge(Vertex u, Vertex v);
    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const noexcept;

    [[nodiscard]] std::size_t node_count() const noexcept { return node_count_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }

    //! Neighbor lists sorted ascending.
    [[nodiscard]] std::vector<std::vector<Vertex>> adjacency() const;

    //! Same vertices (and positions/kinds), only the given edges.
    [[nodiscard]] Graph with_edges(const std::vector<Edge>& edges) const;

    std::vector<Point> positions;  // empty or one per vertex
    std::vector<NodeKind> kinds;   // empty or one per vertex

  private:
    [[nodiscard]] std::uint64_t key(Vertex u, Vertex v) const noexcept {
        return static_cast<std::uint64_t>(u) * node_count_ + v;
    }

    std::size_t node_count_{0};
    std::vector<Edge> edges_;
    std::unordered_set<std::uint64_t> index_;
};

//! Maps k in [0, Lmax) to the k-th pair in row-major order over u < v.
Edge edge_from_index(std::uint64_t k, std::size_t n);

}  // namespace rollchain::netsim
