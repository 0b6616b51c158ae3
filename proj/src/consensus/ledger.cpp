// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <rollchain/consensus/ledger.hpp>

#include <algorithm>

namespace rollchain::consensus {

void ConfirmationLedger::observe(const NodeState& node) {
    auto& votes = votes_[node.node_id];
    if (node.chain.empty()) return;
    votes.erase(votes.upper_bound(node.chain.tip().header.global_index), votes.end());
    for (const auto& b : node.chain.blocks) {
        blocks_.try_emplace({b.header.global_index, b.header.hash}, b);
        votes[b.header.global_index] = b.header.hash;
    }
}

void ConfirmationLedger::record_missed_turn(std::uint64_t global_index, NodeId creator) {
    missed_.insert({global_index, creator});
}

ResultantChain ConfirmationLedger::finalize(const std::set<NodeId>& live_nodes) const {
    return finalize(live_nodes, live_nodes.size());
}

ResultantChain ConfirmationLedger::finalize(const std::set<NodeId>& eligible, std::uint64_t live_count) const {
    std::map<std::pair<std::uint64_t, chain::Digest>, std::uint64_t> holders;
    for (const auto& [id, votes] : votes_) {
        if (!eligible.contains(id)) continue;
        for (const auto& [height, hash] : votes) ++holders[{height, hash}];
    }

    ResultantChain result;
    result.live_count = live_count;
    std::set<LostBlock> lost = missed_;

    // Settle one height at a time. A confirmed block is taken only if it
    // extends the blocks already accepted.
    for (auto it = blocks_.begin(); it != blocks_.end();) {
        const auto height = it->first.first;
        auto end = it;
        const Block* best = nullptr;
        std::uint64_t best_count = 0;
        const Block* parent = result.accepted.empty() ? nullptr : &result.accepted.back();
        for (; end != blocks_.end() && end->first.first == height; ++end) {
            const auto& block = end->second;
            const auto found = holders.find(end->first);
            const auto n = found == holders.end() ? 0 : found->second;
            result.confirmations.push_back({height, block.header.hash, block.header.creator_id, n, false});
            const bool links = parent == nullptr || (parent->header.global_index + 1 == height &&
                                                     parent->header.hash == block.header.prev_hash);
            if (links && confirmed(n, live_count) && n > best_count) {
                best = &block;
                best_count = n;
            }
        }
        for (auto jt = it; jt != end; ++jt) {
            const auto& block = jt->second;
            if (&block == best) {
                result.accepted.push_back(block);
                for (auto& c : result.confirmations) {
                    if (c.global_index == height && c.hash == block.header.hash) c.accepted = true;
                }
            } else {
                lost.insert({height, block.header.creator_id});
            }
        }
        it = end;
    }
    result.lost.assign(lost.begin(), lost.end());
    return result;
}

ResultantChain finalize_resultant(std::span<const NodeState> nodes, std::uint64_t live_count) {
    ConfirmationLedger ledger;
    std::set<NodeId> eligible;
    for (const auto& node : nodes) {
        if (node.status == NodeStatus::kFailed) continue;
        ledger.observe(node);
        eligible.insert(node.node_id);
    }
    return ledger.finalize(eligible, live_count);
}

}  // namespace rollchain::consensus
