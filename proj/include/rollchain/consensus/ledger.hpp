// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include <rollchain/consensus/node.hpp>

namespace rollchain::consensus {

//! Confirmation threshold: a block is final when held by strictly more than
//! 51% of the live nodes.
inline constexpr std::uint64_t kConfirmationPercent = 51;

constexpr bool confirmed(std::uint64_t holders, std::uint64_t live_count) noexcept {
    return live_count > 0 && holders * 100 > kConfirmationPercent * live_count;
}

struct LostBlock {
    std::uint64_t global_index{0};
    NodeId creator_id{0};

    friend auto operator<=>(const LostBlock&, const LostBlock&) = default;
};

struct Confirmation {
    std::uint64_t global_index{0};
    chain::Digest hash{};
    NodeId creator_id{0};
    std::uint64_t holders{0};
    bool accepted{false};
};

struct ResultantChain {
    std::vector<Block> accepted;             // ascending global index
    std::vector<LostBlock> lost;             // ascending (global index, creator)
    std::vector<Confirmation> confirmations; // every candidate block with its tally
    std::uint64_t live_count{0};
};

//! The aggregator's record of which nodes have held which blocks. Each node
//! votes for the block it last held at each height, so a node that switched
//! branches counts once. Blocks that rolled out of a window keep their votes;
//! heights above a node's tip are withdrawn.
class ConfirmationLedger {
  public:
    void observe(const NodeState& node);
    //! A turn whose creator could not build a block.
    void record_missed_turn(std::uint64_t global_index, NodeId creator);

    [[nodiscard]] ResultantChain finalize(const std::set<NodeId>& live_nodes) const;
    //! Holders are counted among `eligible`; `live_count` is the denominator.
    [[nodiscard]] ResultantChain finalize(const std::set<NodeId>& eligible, std::uint64_t live_count) const;

  private:
    std::map<std::pair<std::uint64_t, chain::Digest>, Block> blocks_;
    std::map<NodeId, std::map<std::uint64_t, chain::Digest>> votes_;
    std::set<LostBlock> missed_;
};

//! Tallies the current windows of all non-failed nodes and accepts each block
//! with holders / live_count > 0.51.
ResultantChain finalize_resultant(std::span<const NodeState> nodes, std::uint64_t live_count);

}  // namespace rollchain::consensus
