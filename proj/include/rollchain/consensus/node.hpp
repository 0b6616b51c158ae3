// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include <rollchain/chain/local_chain.hpp>

namespace rollchain::consensus {

using chain::Block;
using chain::LocalChain;
using chain::NodeId;

enum class NodeStatus {
    kAlive,
    kFailed,    // crashed: neither builds nor acknowledges blocks
    kIsolated,  // running, but every link is cut
};

std::string_view to_string(NodeStatus status) noexcept;

struct TrafficCounters {
    std::uint64_t bytes_sent{0};
    std::uint64_t bytes_received{0};
    std::uint64_t messages_sent{0};
    std::uint64_t messages_received{0};

    friend bool operator==(const TrafficCounters&, const TrafficCounters&) = default;
};

struct NodeState {
    NodeId node_id{0};
    LocalChain chain;
    NodeStatus status{NodeStatus::kAlive};
    std::set<NodeId> authorized_registry;
    TrafficCounters traffic;

    friend bool operator==(const NodeState&, const NodeState&) = default;
};

enum class DisseminationVariant {
    kFullChain,    // (a) the renewed chain goes to every neighbor
    kSingleBlock,  // (b) only the new block goes out
};

std::string_view to_string(DisseminationVariant variant) noexcept;
std::optional<DisseminationVariant> parse_variant(std::string_view name) noexcept;

//! A proposal on the wire: one block (b) or a whole window (a).
using Payload = std::variant<Block, std::vector<Block>>;

struct Message {
    NodeId sender{0};
    Payload payload;
};

//! Serialized size of the payload.
std::size_t wire_size(const Message& message) noexcept;

//! Receivers answer every proposal with kind:u8 node_id:u64 block_hash:32.
inline constexpr std::size_t kReplySize = 1 + 8 + 32;

enum class RejectReason {
    kUnauthorized,
    kOutOfQueue,
    kBadLinkage,
    kBadIndex,
    kBadHash,
    kStale,     // the proposal does not extend the local chain
    kNotAlive,
};

std::string_view to_string(RejectReason reason) noexcept;

struct Verdict {
    bool accepted{false};
    std::optional<RejectReason> reason;
    std::vector<Block> pruned;  // blocks dropped by the node's window while accepting

    static Verdict accept(std::vector<Block> pruned = {}) { return {true, std::nullopt, std::move(pruned)}; }
    static Verdict reject(RejectReason r) { return {false, r, {}}; }
};

//! Who may propose during the current turn.
struct TurnContext {
    std::uint64_t iteration{0};
    NodeId scheduled_creator{0};
    chain::PruningMode pruning{chain::PruningMode::kReset};
};

//! Validates a proposal and, on acceptance, updates the node's chain. A block
//! (variant b) is appended; a window (variant a) replaces the local chain only
//! if it validates and strictly extends it. Rejections leave the node unchanged.
Verdict handle_incoming(NodeState& node, const Message& message, const TurnContext& turn);

//! Rebuilds the node's chain from its neighbors: walking up from the lowest
//! height where a strict majority of `neighbors` agree on a block, it keeps each
//! majority block until a height has no strict majority. Throws NoNeighbors on an
//! empty list. If no height has a majority the node keeps its own chain.
NodeState recover_node(const NodeState& node, std::span<const NodeState> neighbors, chain::PruningMode pruning);

//! Trims a window so it satisfies the pruning discipline: a reset window starts
//! at its latest cycle boundary, a sliding window keeps its newest `capacity` blocks.
LocalChain normalize_window(LocalChain chain, chain::PruningMode pruning);

}  // namespace rollchain::consensus
