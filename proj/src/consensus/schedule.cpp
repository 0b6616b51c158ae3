// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <rollchain/consensus/schedule.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include <rollchain/consensus/errors.hpp>

namespace rollchain::consensus {

std::string_view to_string(ConsensusErrc code) noexcept {
    switch (code) {
        case ConsensusErrc::kDuplicateId:
            return "DuplicateId";
        case ConsensusErrc::kNoNeighbors:
            return "NoNeighbors";
        case ConsensusErrc::kConfigError:
            return "ConfigError";
    }
    return "Unknown";
}

Schedule build_schedule(std::span<const NodeId> node_ids, const netsim::Graph& topology) {
    if (node_ids.empty()) throw ConsensusError{ConsensusErrc::kConfigError, "schedule needs at least one node"};
    if (node_ids.size() != topology.node_count()) {
        throw ConsensusError{ConsensusErrc::kConfigError,
                             std::to_string(node_ids.size()) + " ids for a topology of " +
                                 std::to_string(topology.node_count()) + " nodes"};
    }
    std::set<NodeId> seen;
    for (auto id : node_ids) {
        if (!seen.insert(id).second) {
            throw ConsensusError{ConsensusErrc::kDuplicateId, "node id " + std::to_string(id) + " appears twice"};
        }
    }

    const auto adjacency = topology.adjacency();
    std::vector<std::size_t> order(node_ids.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::ranges::sort(order, {}, [&](std::size_t v) { return node_ids[v]; });

    Schedule schedule;
    schedule.reserve(order.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        const auto v = order[rank];
        ScheduleEntry entry;
        entry.node_id = node_ids[v];
        entry.activation_time = rank + 1;
        for (auto u : adjacency[v]) entry.neighbor_ids.push_back(node_ids[u]);
        std::ranges::sort(entry.neighbor_ids);
        schedule.push_back(std::move(entry));
    }
    return schedule;
}

std::vector<NodeId> sequential_ids(std::size_t n) {
    std::vector<NodeId> ids(n);
    std::iota(ids.begin(), ids.end(), NodeId{1});
    return ids;
}

const ScheduleEntry& entry_for_iteration(const Schedule& schedule, std::uint64_t iteration) {
    if (schedule.empty() || iteration == 0) {
        throw ConsensusError{ConsensusErrc::kConfigError, "iterations are 1-based over a non-empty schedule"};
    }
    return schedule[(iteration - 1) % schedule.size()];
}

const ScheduleEntry* find_entry(const Schedule& schedule, NodeId id) noexcept {
    auto it = std::ranges::find(schedule, id, &ScheduleEntry::node_id);
    return it == schedule.end() ? nullptr : &*it;
}

}  // namespace rollchain::consensus
