// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <rollchain/chain/types.hpp>
#include <rollchain/netsim/graph.hpp>

namespace rollchain::consensus {

using chain::NodeId;

//! A node's standing instructions: when it wakes up to build a block and which
//! neighbors it sends to, in order.
struct ScheduleEntry {
    NodeId node_id{0};
    std::uint64_t activation_time{0};
    std::vector<NodeId> neighbor_ids;

    friend bool operator==(const ScheduleEntry&, const ScheduleEntry&) = default;
};

using Schedule = std::vector<ScheduleEntry>;

//! node_ids[i] is vertex i of `topology`. Entries come out in id order with
//! activation times 1, 2, ..., m; neighbor lists are sorted by id.
Schedule build_schedule(std::span<const NodeId> node_ids, const netsim::Graph& topology);

//! Node ids 1..n (the usual numbering of the examples).
std::vector<NodeId> sequential_ids(std::size_t n);

//! Entry whose turn falls on the given 1-based iteration (round-robin).
const ScheduleEntry& entry_for_iteration(const Schedule& schedule, std::uint64_t iteration);

const ScheduleEntry* find_entry(const Schedule& schedule, NodeId id) noexcept;

}  // namespace rollchain::consensus
