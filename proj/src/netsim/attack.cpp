// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <rollchain/netsim/attack.hpp>

#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

#include <rollchain/netsim/errors.hpp>
#include <rollchain/netsim/monte_carlo.hpp>
#include <rollchain/netsim/paths.hpp>

namespace rollchain::netsim {

namespace {

    constexpr int kNoPath = -1;

    //! Adjacency with edge ids so one deployment can be probed under many removal masks.
    struct IndexedAdjacency {
        std::vector<std::vector<std::pair<Vertex, std::size_t>>> out;

        explicit IndexedAdjacency(const Graph& g) : out(g.node_count()) {
            const auto& edges = g.edges();
            for (std::size_t i = 0; i < edges.size(); ++i) {
                out[edges[i].u].emplace_back(edges[i].v, i);
                out[edges[i].v].emplace_back(edges[i].u, i);
            }
        }

        //! Hops from a to b over edges whose removal rank is >= k.
        [[nodiscard]] int hops(Vertex a, Vertex b, const std::vector<std::size_t>& rank, std::size_t k) const {
            if (a == b) return 0;
            std::vector<int> dist(out.size(), kNoPath);
            std::queue<Vertex> frontier;
            dist[a] = 0;
            frontier.push(a);
            while (!frontier.empty()) {
                const auto u = frontier.front();
                frontier.pop();
                for (const auto& [v, id] : out[u]) {
                    if (rank[id] < k || dist[v] != kNoPath) continue;
                    dist[v] = dist[u] + 1;
                    if (v == b) return dist[v];
                    frontier.push(v);
                }
            }
            return kNoPath;
        }
    };

    struct TrialOutcome {
        int baseline{kNoPath};
        std::vector<int> hops;  // per fraction
    };

    void check_config(const AttackSweepConfig& config) {
        if (config.trials == 0) throw NetsimError{NetsimErrc::kConfigError, "trials must be at least 1"};
        if (config.fractions.empty()) throw NetsimError{NetsimErrc::kConfigError, "no removal fractions"};
        for (std::size_t i = 0; i < config.fractions.size(); ++i) {
            const double f = config.fractions[i];
            if (!(f >= 0.0 && f <= 1.0)) {
                throw NetsimError{NetsimErrc::kConfigError, "removal fractions must lie in [0, 1]"};
            }
            if (i > 0 && f < config.fractions[i - 1]) {
                throw NetsimError{NetsimErrc::kConfigError, "removal fractions must be sorted ascending"};
            }
        }
        for (double d : config.densities) {
            if (!(d >= 0.0) || !std::isfinite(d)) {
                throw NetsimError{NetsimErrc::kConfigError, "densities must be finite and nonnegative"};
            }
        }
    }

    TrialOutcome run_trial(const AttackSweepConfig& config, double density, Engine& rng) {
        const auto deployment = gen_linear_deployment(config.deployment, density, rng);
        const auto& g = deployment.graph;
        const IndexedAdjacency adj{g};
        const auto a = deployment.endpoint_a;
        const auto b = deployment.endpoint_b;

        TrialOutcome outcome;
        std::vector<std::size_t> rank(g.edge_count(), std::numeric_limits<std::size_t>::max());
        outcome.baseline = adj.hops(a, b, rank, 0);
        outcome.hops.reserve(config.fractions.size());

        if (config.coupled) {
            const auto order = removal_order(g, rng);
            for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
            for (double f : config.fractions) outcome.hops.push_back(adj.hops(a, b, rank, removal_count(f, g.edge_count())));
            return outcome;
        }

        std::vector<std::size_t> order(g.edge_count());
        for (double f : config.fractions) {
            const auto k = removal_count(f, g.edge_count());
            std::iota(order.begin(), order.end(), std::size_t{0});
            for (std::size_t i = 0; i < k; ++i) {
                std::uniform_int_distribution<std::size_t> pick{i, order.size() - 1};
                std::swap(order[i], order[pick(rng)]);
            }
            for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
            outcome.hops.push_back(adj.hops(a, b, rank, k));
        }
        return outcome;
    }

}  // namespace

std::optional<double> AttackSweepReport::breakdown_fraction(double density) const {
    for (const auto& cell : cells) {
        if (cell.density == density && cell.p_hat < 0.5) return cell.fraction;
    }
    return std::nullopt;
}

AttackSweepReport attack_sweep(const AttackSweepConfig& config) {
    check_config(config);

    AttackSweepReport report;
    for (std::size_t d = 0; d < config.densities.size(); ++d) {
        const double density = config.densities[d];
        const auto density_seed = derive_seed(config.seed, {d});

        std::vector<TrialOutcome> outcomes(config.trials);
        for_each_trial(config.trials, config.threads, [&](std::size_t t) {
            auto rng = make_engine(derive_seed(density_seed, {t}));
            outcomes[t] = run_trial(config, density, rng);
        });

        const auto node_count = config.deployment.line_node_count + extra_node_count(config.deployment, density);
        for (std::size_t fi = 0; fi < config.fractions.size(); ++fi) {
            std::size_t successes = 0;
            double spl_sum = 0.0;
            double stretch_sum = 0.0;
            std::size_t stretch_count = 0;
            for (const auto& o : outcomes) {
                const int h = o.hops[fi];
                if (h == kNoPath) continue;
                ++successes;
                spl_sum += h;
                if (o.baseline > 0) {
                    stretch_sum += static_cast<double>(h) / o.baseline;
                    ++stretch_count;
                }
            }
            const auto estimate = make_estimate(successes, config.trials);
            AttackCell cell;
            cell.density = density;
            cell.fraction = config.fractions[fi];
            cell.node_count = node_count;
            cell.trials = config.trials;
            cell.successes = successes;
            cell.p_hat = estimate.p_hat;
            cell.std_error = estimate.std_error;
            cell.mean_spl = successes ? spl_sum / static_cast<double>(successes) : std::nan("");
            cell.mean_stretch = stretch_count ? stretch_sum / static_cast<double>(stretch_count) : std::nan("");
            cell.seed = density_seed;
            report.cells.push_back(cell);
        }
    }
    return report;
}

}  // namespace rollchain::netsim
