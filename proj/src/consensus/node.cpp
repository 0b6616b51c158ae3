// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <rollchain/consensus/node.hpp>

#include <map>

#include <rollchain/chain/errors.hpp>
#include <rollchain/chain/serialization.hpp>
#include <rollchain/consensus/errors.hpp>

namespace rollchain::consensus {

using chain::ChainErrc;
using chain::ChainError;
using chain::PruningMode;

std::string_view to_string(NodeStatus status) noexcept {
    switch (status) {
        case NodeStatus::kAlive:
            return "alive";
        case NodeStatus::kFailed:
            return "failed";
        case NodeStatus::kIsolated:
            return "isolated";
    }
    return "unknown";
}

std::string_view to_string(DisseminationVariant variant) noexcept {
    return variant == DisseminationVariant::kFullChain ? "full-chain" : "single-block";
}

std::optional<DisseminationVariant> parse_variant(std::string_view name) noexcept {
    if (name == "full-chain" || name == "a") return DisseminationVariant::kFullChain;
    if (name == "single-block" || name == "b") return DisseminationVariant::kSingleBlock;
    return std::nullopt;
}

std::string_view to_string(RejectReason reason) noexcept {
    switch (reason) {
        case RejectReason::kUnauthorized:
            return "Unauthorized";
        case RejectReason::kOutOfQueue:
            return "OutOfQueue";
        case RejectReason::kBadLinkage:
            return "BadLinkage";
        case RejectReason::kBadIndex:
            return "BadIndex";
        case RejectReason::kBadHash:
            return "BadHash";
        case RejectReason::kStale:
            return "Stale";
        case RejectReason::kNotAlive:
            return "NotAlive";
    }
    return "Unknown";
}

std::size_t wire_size(const Message& message) noexcept {
    return std::visit(
        [](const auto& payload) -> std::size_t {
            using T = std::decay_t<decltype(payload)>;
            if constexpr (std::is_same_v<T, Block>) {
                return chain::encoded_size(payload);
            } else {
                return chain::encoded_size(std::span<const Block>{payload});
            }
        },
        message.payload);
}

namespace {

    RejectReason reason_for(ChainErrc code) noexcept {
        switch (code) {
            case ChainErrc::kBadLinkage:
                return RejectReason::kBadLinkage;
            case ChainErrc::kBadIndex:
                return RejectReason::kBadIndex;
            default:
                return RejectReason::kBadHash;
        }
    }

    Verdict accept_block(NodeState& node, const Block& block, const TurnContext& turn) {
        const auto& tip = node.chain.tip();
        if (block.header.global_index <= tip.header.global_index) return Verdict::reject(RejectReason::kStale);
        try {
            auto rolled = chain::roll_forward(node.chain, block, turn.pruning);
            node.chain = std::move(rolled.chain);
            return Verdict::accept(std::move(rolled.deleted));
        } catch (const ChainError& e) {
            return Verdict::reject(reason_for(e.code()));
        }
    }

    Verdict accept_window(NodeState& node, const std::vector<Block>& window) {
        const auto algorithm = node.chain.algorithm;
        if (window.size() > node.chain.capacity + 1) return Verdict::reject(RejectReason::kBadIndex);
        for (std::size_t i = 0; i < window.size(); ++i) {
            try {
                if (i == 0) {
                    if (chain::hash_block(window[0], algorithm) != window[0].header.hash) {
                        return Verdict::reject(RejectReason::kBadHash);
                    }
                } else {
                    chain::check_successor(window[i - 1], window[i], algorithm);
                }
            } catch (const ChainError& e) {
                return Verdict::reject(reason_for(e.code()));
            }
        }

        const auto& tip = node.chain.tip();
        if (window.back().header.global_index <= tip.header.global_index) {
            return Verdict::reject(RejectReason::kStale);
        }
        const auto first = window.front().header.global_index;
        const auto at = tip.header.global_index;
        if (at < first || window[at - first].header.hash != tip.header.hash) {
            return Verdict::reject(RejectReason::kBadLinkage);
        }

        std::vector<Block> dropped;
        for (const auto& b : node.chain.blocks) {
            if (b.header.global_index < first) dropped.push_back(b);
        }
        node.chain.blocks = window;
        return Verdict::accept(std::move(dropped));
    }

}  // namespace

Verdict handle_incoming(NodeState& node, const Message& message, const TurnContext& turn) {
    if (node.status != NodeStatus::kAlive) return Verdict::reject(RejectReason::kNotAlive);
    if (!node.authorized_registry.contains(message.sender)) return Verdict::reject(RejectReason::kUnauthorized);
    if (message.sender != turn.scheduled_creator) return Verdict::reject(RejectReason::kOutOfQueue);

    if (const auto* block = std::get_if<Block>(&message.payload)) {
        if (block->header.creator_id != message.sender) return Verdict::reject(RejectReason::kOutOfQueue);
        return accept_block(node, *block, turn);
    }
    const auto& window = std::get<std::vector<Block>>(message.payload);
    if (window.empty()) return Verdict::reject(RejectReason::kStale);
    if (window.back().header.creator_id != message.sender) return Verdict::reject(RejectReason::kOutOfQueue);
    return accept_window(node, window);
}

LocalChain normalize_window(LocalChain chain, PruningMode pruning) {
    auto& blocks = chain.blocks;
    if (blocks.empty()) return chain;

    if (pruning == PruningMode::kSliding) {
        if (blocks.size() > chain.capacity) {
            blocks.erase(blocks.begin(), blocks.end() - static_cast<std::ptrdiff_t>(chain.capacity));
        }
        return chain;
    }

    // Latest carry-over, or a closed cycle whose successor is already present.
    std::size_t start = 0;
    for (std::size_t i = blocks.size(); i-- > 0;) {
        const auto idx = blocks[i].header.index_in_cycle;
        if (idx == 0 || (idx == chain.capacity && i + 1 < blocks.size())) {
            start = i;
            break;
        }
    }
    blocks.erase(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(start));
    auto& head = blocks.front().header;
    if (head.index_in_cycle == chain.capacity && blocks.size() > 1) {
        head.cycle_index += 1;
        head.index_in_cycle = 0;
    }
    if (blocks.size() > chain.capacity + 1) {
        blocks.erase(blocks.begin(), blocks.end() - static_cast<std::ptrdiff_t>(chain.capacity + 1));
    }
    return chain;
}

NodeState recover_node(const NodeState& node, std::span<const NodeState> neighbors, PruningMode pruning) {
    if (neighbors.empty()) {
        throw ConsensusError{ConsensusErrc::kNoNeighbors,
                             "node " + std::to_string(node.node_id) + " has no neighbor to recover from"};
    }

    // height -> hash -> (holders, first copy seen)
    std::map<std::uint64_t, std::map<chain::Digest, std::pair<std::size_t, const Block*>>> tally;
    for (const auto& peer : neighbors) {
        for (const auto& b : peer.chain.blocks) {
            auto& slot = tally[b.header.global_index][b.header.hash];
            if (slot.first++ == 0) slot.second = &b;
        }
    }

    auto majority_at = [&](const auto& candidates) -> const Block* {
        for (const auto& [hash, slot] : candidates) {
            if (2 * slot.first > neighbors.size()) return slot.second;
        }
        return nullptr;
    };

    std::vector<Block> restored;
    for (const auto& [height, candidates] : tally) {
        const Block* winner = majority_at(candidates);
        if (winner == nullptr) {
            if (restored.empty()) continue;
            break;
        }
        if (!restored.empty() && (height != restored.back().header.global_index + 1 ||
                                  winner->header.prev_hash != restored.back().header.hash)) {
            break;
        }
        restored.push_back(*winner);
    }

    NodeState out = node;
    out.status = NodeStatus::kAlive;
    if (!restored.empty()) {
        out.chain.blocks = std::move(restored);
        out.chain = normalize_window(std::move(out.chain), pruning);
    }
    return out;
}

}  // namespace rollchain::consensus
