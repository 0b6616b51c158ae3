// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <rollchain/netsim/generators.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include <rollchain/netsim/errors.hpp>

namespace rollchain::netsim {

std::string_view to_string(GraphModel model) noexcept {
    return model == GraphModel::kExactEdges ? "exact" : "bernoulli";
}

std::optional<GraphModel> parse_graph_model(std::string_view name) noexcept {
    if (name == "exact") return GraphModel::kExactEdges;
    if (name == "bernoulli") return GraphModel::kBernoulli;
    return std::nullopt;
}

namespace {

    void check_edge_count(std::size_t n, std::uint64_t edge_count) {
        if (edge_count > max_edges(n)) {
            throw NetsimError{NetsimErrc::kLTooLarge, "L = " + std::to_string(edge_count) +
                                                          " exceeds Lmax = n(n-1)/2 = " +
                                                          std::to_string(max_edges(n)) + " for n = " +
                                                          std::to_string(n)};
        }
    }

}  // namespace

Graph gen_random_graph(std::size_t n, std::uint64_t edge_count, Engine& rng) {
    check_edge_count(n, edge_count);
    const auto lmax = max_edges(n);

    // Floyd's sampling: uniform subset of size L from [0, Lmax).
    std::set<std::uint64_t> chosen;
    for (std::uint64_t j = lmax - edge_count; j < lmax; ++j) {
        std::uniform_int_distribution<std::uint64_t> pick{0, j};
        const auto t = pick(rng);
        if (!chosen.insert(t).second) chosen.insert(j);
    }

    Graph g{n};
    for (auto k : chosen) {
        const auto e = edge_from_index(k, n);
        g.add_edge(e.u, e.v);
    }
    return g;
}

Graph gen_bernoulli_graph(std::size_t n, std::uint64_t edge_count, Engine& rng) {
    check_edge_count(n, edge_count);
    Graph g{n};
    if (n < 2) return g;
    std::bernoulli_distribution keep{static_cast<double>(edge_count) / static_cast<double>(max_edges(n))};
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (keep(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

Graph gen_graph(GraphModel model, std::size_t n, std::uint64_t edge_count, Engine& rng) {
    return model == GraphModel::kExactEdges ? gen_random_graph(n, edge_count, rng)
                                            : gen_bernoulli_graph(n, edge_count, rng);
}

Area default_area(const DeploymentParams& params) noexcept {
    const auto length = static_cast<double>(params.line_node_count - 1) * params.spacing;
    return {-params.radius, length + params.radius, -params.radius, params.radius};
}

std::size_t extra_node_count(const DeploymentParams& params, double density) noexcept {
    return static_cast<std::size_t>(std::floor(density * params.area.size() + 0.5));
}

Deployment gen_linear_deployment(const DeploymentParams& params, double extra_density, Engine& rng) {
    if (params.line_node_count < 2) {
        throw NetsimError{NetsimErrc::kConfigError, "a deployment needs at least two line sensors"};
    }
    if (!(params.spacing > 0.0) || !(params.radius > 0.0)) {
        throw NetsimError{NetsimErrc::kConfigError, "spacing and radius must be positive"};
    }
    if (!(extra_density >= 0.0) || !std::isfinite(extra_density)) {
        throw NetsimError{NetsimErrc::kConfigError, "density must be a finite nonnegative number"};
    }
    const auto& area = params.area;
    if (!(area.width() > 0.0) || !(area.height() > 0.0) || !std::isfinite(area.size())) {
        throw NetsimError{NetsimErrc::kDegenerateArea, "scatter area must have positive width and height"};
    }

    const auto line = params.line_node_count;
    const auto total = line + extra_node_count(params, extra_density);

    Deployment d;
    d.graph = Graph{total};
    d.line_node_count = line;
    d.endpoint_a = 0;
    d.endpoint_b = static_cast<Vertex>(line - 1);

    auto& pos = d.graph.positions;
    pos.reserve(total);
    for (std::size_t i = 0; i < line; ++i) pos.push_back({static_cast<double>(i) * params.spacing, 0.0});
    std::uniform_real_distribution<double> ux{area.x_min, area.x_max};
    std::uniform_real_distribution<double> uy{area.y_min, area.y_max};
    for (std::size_t i = line; i < total; ++i) {
        const double x = ux(rng);
        const double y = uy(rng);
        pos.push_back({x, y});
    }
    d.graph.kinds.assign(total, NodeKind::kFixed);

    const double r2 = params.radius * params.radius;
    std::vector<Vertex> in_range;
    for (std::size_t i = 0; i < line; ++i) {
        in_range.clear();
        for (std::size_t j = 0; j < total; ++j) {
            const double dx = pos[j].x - pos[i].x;
            const double dy = pos[j].y - pos[i].y;
            if (dx * dx + dy * dy <= r2) in_range.push_back(static_cast<Vertex>(j));
        }
        for (std::size_t a = 0; a < in_range.size(); ++a) {
            for (std::size_t b = a + 1; b < in_range.size(); ++b) d.graph.add_edge(in_range[a], in_range[b]);
        }
    }
    return d;
}

}  // namespace rollchain::netsim
