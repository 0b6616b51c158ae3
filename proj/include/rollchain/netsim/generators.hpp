// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include <rollchain/netsim/graph.hpp>
#include <rollchain/netsim/rng.hpp>

namespace rollchain::netsim {

enum class GraphModel {
    kExactEdges,  // exactly L edges chosen uniformly
    kBernoulli,   // each pair independently with p = L / Lmax
};

std::string_view to_string(GraphModel model) noexcept;
std::optional<GraphModel> parse_graph_model(std::string_view name) noexcept;

//! Uniform graph with exactly L distinct edges on n labelled vertices.
Graph gen_random_graph(std::size_t n, std::uint64_t edge_count, Engine& rng);

//! Each of the Lmax pairs present independently with probability L / Lmax.
Graph gen_bernoulli_graph(std::size_t n, std::uint64_t edge_count, Engine& rng);

Graph gen_graph(GraphModel model, std::size_t n, std::uint64_t edge_count, Engine& rng);

struct Area {
    double x_min{0.0};
    double x_max{0.0};
    double y_min{0.0};
    double y_max{0.0};

    [[nodiscard]] double width() const noexcept { return x_max - x_min; }
    [[nodiscard]] double height() const noexcept { return y_max - y_min; }
    [[nodiscard]] double size() const noexcept { return width() * height(); }
};

struct DeploymentParams {
    std::size_t line_node_count{2};
    double spacing{1.0};  // meters between consecutive line sensors
    double radius{1.0};   // radio range of a line sensor
    Area area{};          // where extra sensors are scattered
};

//! Default scatter area: the line's bounding box grown by one radius on each side.
Area default_area(const DeploymentParams& params) noexcept;

//! Extra sensors placed for a density (sensors per square meter).
std::size_t extra_node_count(const DeploymentParams& params, double density) noexcept;

struct Deployment {
    Graph graph;
    Vertex endpoint_a{0};
    Vertex endpoint_b{0};
    std::size_t line_node_count{0};
};

//! Line sensors sit on the x axis at equal spacing, extra sensors are uniform in
//! the area, and the edge set is the union, over line sensors, of the complete
//! graph on every sensor within that line sensor's radius.
Deployment gen_linear_deployment(const DeploymentParams& params, double extra_density, Engine& rng);

}  // namespace rollchain::netsim
