// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <rollchain/chain/full_chain.hpp>
#include <rollchain/consensus/event_log.hpp>
#include <rollchain/consensus/ledger.hpp>
#include <rollchain/consensus/schedule.hpp>

namespace rollchain::consensus {

using Rng = std::mt19937_64;

//! One sensor transaction of 1..3 random readings attributed to `creator`.
std::vector<chain::Transaction> synthetic_transactions(NodeId creator, chain::Timestamp now, Rng& rng);

//! Per-node status overrides by iteration; a node not listed is alive.
class FailurePlan {
  public:
    void set(NodeId node, std::uint64_t iteration, NodeStatus status);
    [[nodiscard]] NodeStatus status_at(NodeId node, std::uint64_t iteration) const;
    [[nodiscard]] bool empty() const noexcept { return plan_.empty(); }
    [[nodiscard]] const std::map<NodeId, std::map<std::uint64_t, NodeStatus>>& entries() const noexcept {
        return plan_;
    }

  private:
    std::map<NodeId, std::map<std::uint64_t, NodeStatus>> plan_;
};

//! An unscheduled proposal: `sender` builds a block on its tip during
//! `iteration` and offers it to `target`.
struct Injection {
    std::uint64_t iteration{0};
    NodeId sender{0};
    NodeId target{0};
};

struct ProtocolConfig {
    DisseminationVariant variant{DisseminationVariant::kSingleBlock};
    chain::PruningMode pruning{chain::PruningMode::kReset};
    std::size_t capacity{0};  // 0: one block per scheduled node
    std::size_t cycles{1};
    chain::HashAlgorithm algorithm{chain::HashAlgorithm::kSha256};
    chain::Timestamp genesis_time{0};
    chain::Timestamp tick_ms{1000};
    FailurePlan failures;
    std::vector<Injection> injections;
    //! Starting block shared by every node; a fresh genesis when empty.
    std::optional<Block> genesis;
};

//! Traffic of one iteration, summed over all nodes.
struct IterationTraffic {
    std::uint64_t iteration{0};
    std::uint64_t bytes{0};
    std::uint64_t cumulative_bytes{0};
};

//! The whole network of one run: node states, the schedule, and the aggregator ledger.
class Network {
  public:
    Network(Schedule schedule, ProtocolConfig config);

    //! Runs one scheduled turn: status changes and recoveries, injected
    //! proposals, then the creator's block and its dissemination.
    std::vector<Event> step_iteration(std::uint64_t iteration, Rng& rng);

    [[nodiscard]] const std::vector<NodeState>& nodes() const noexcept { return nodes_; }
    [[nodiscard]] const NodeState& node(NodeId id) const;
    [[nodiscard]] const Schedule& schedule() const noexcept { return schedule_; }
    [[nodiscard]] const ProtocolConfig& config() const noexcept { return config_; }
    [[nodiscard]] std::size_t capacity() const noexcept { return capacity_; }
    [[nodiscard]] std::uint64_t total_turns() const noexcept { return capacity_ * config_.cycles; }
    [[nodiscard]] const ConfirmationLedger& ledger() const noexcept { return ledger_; }

    [[nodiscard]] std::set<NodeId> live_nodes() const;
    [[nodiscard]] std::uint64_t total_bytes() const noexcept;

  private:
    NodeState& mutable_node(NodeId id);
    bool reachable(NodeId id) const;
    void deliver(NodeId from, NodeState& to, const Message& message, const TurnContext& turn,
                 std::vector<Event>& events);
    bool recover(NodeState& node, std::uint64_t iteration, std::vector<Event>& events);

    Schedule schedule_;
    ProtocolConfig config_;
    std::size_t capacity_{0};
    std::vector<NodeState> nodes_;
    std::map<NodeId, std::size_t> index_;
    ConfirmationLedger ledger_;
};

struct ProtocolRun {
    ResultantChain resultant;
    std::vector<NodeState> nodes;
    std::vector<Event> events;
    std::vector<IterationTraffic> traffic;
};

//! Every scheduled turn of `cycles` cycles, then finalization against the nodes
//! that are not failed after the last turn.
ProtocolRun run_protocol(const Schedule& schedule, const ProtocolConfig& config, Rng& rng);

//! Resultant chain split into cycle records and checked for the cycle overlap.
chain::FullChain assemble_resultant(const ResultantChain& resultant, std::size_t capacity,
                                    chain::HashAlgorithm algorithm);

}  // namespace rollchain::consensus
