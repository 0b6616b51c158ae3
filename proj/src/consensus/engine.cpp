// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <rollchain/consensus/engine.hpp>

#include <fmt/format.h>

#include <rollchain/chain/serialization.hpp>
#include <rollchain/consensus/errors.hpp>

namespace rollchain::consensus {

using chain::PruningMode;

void FailurePlan::set(NodeId node, std::uint64_t iteration, NodeStatus status) {
    plan_[node][iteration] = status;
}

NodeStatus FailurePlan::status_at(NodeId node, std::uint64_t iteration) const {
    const auto it = plan_.find(node);
    if (it == plan_.end()) return NodeStatus::kAlive;
    const auto jt = it->second.find(iteration);
    return jt == it->second.end() ? NodeStatus::kAlive : jt->second;
}

namespace {

    std::string rejected(RejectReason reason) { return fmt::format("rejected:{}", to_string(reason)); }

    void check_config(const Schedule& schedule, const ProtocolConfig& config, std::size_t capacity) {
        if (schedule.empty()) throw ConsensusError(ConsensusErrc::kConfigError, "schedule is empty");
        if (config.cycles == 0) throw ConsensusError(ConsensusErrc::kConfigError, "cycles must be at least 1");
        if (config.tick_ms == 0) throw ConsensusError(ConsensusErrc::kConfigError, "tick_ms must be positive");
        const auto turns = static_cast<std::uint64_t>(capacity) * config.cycles;
        for (const auto& [id, _] : config.failures.entries()) {
            if (!find_entry(schedule, id)) {
                throw ConsensusError(ConsensusErrc::kConfigError, fmt::format("failure plan names unknown node {}", id));
            }
        }
        for (const auto& inj : config.injections) {
            if (!find_entry(schedule, inj.sender) || !find_entry(schedule, inj.target)) {
                throw ConsensusError(ConsensusErrc::kConfigError,
                                     fmt::format("injection at iteration {} names an unknown node", inj.iteration));
            }
            if (inj.iteration == 0 || inj.iteration > turns) {
                throw ConsensusError(ConsensusErrc::kConfigError,
                                     fmt::format("injection iteration {} outside 1..{}", inj.iteration, turns));
            }
            if (inj.sender == entry_for_iteration(schedule, inj.iteration).node_id) {
                throw ConsensusError(ConsensusErrc::kConfigError,
                                     fmt::format("injection at iteration {} comes from the scheduled creator",
                                                 inj.iteration));
            }
        }
    }

}  // namespace

Network::Network(Schedule schedule, ProtocolConfig config)
    : schedule_(std::move(schedule)), config_(std::move(config)) {
    capacity_ = config_.capacity ? config_.capacity : schedule_.size();
    check_config(schedule_, config_, capacity_);

    Block genesis = config_.genesis ? *config_.genesis : chain::make_genesis(config_.genesis_time, config_.algorithm);
    genesis.header.index_in_cycle = 0;
    if (config_.genesis && genesis.header.global_index > 0) ++genesis.header.cycle_index;

    std::set<NodeId> registry;
    for (const auto& e : schedule_) registry.insert(e.node_id);
    for (const auto& e : schedule_) {
        NodeState node;
        node.node_id = e.node_id;
        node.chain = chain::make_chain(genesis, capacity_, config_.algorithm);
        node.authorized_registry = registry;
        index_.emplace(e.node_id, nodes_.size());
        nodes_.push_back(std::move(node));
    }
    for (const auto& node : nodes_) ledger_.observe(node);
}

const NodeState& Network::node(NodeId id) const {
    return nodes_.at(index_.at(id));
}

NodeState& Network::mutable_node(NodeId id) {
    return nodes_.at(index_.at(id));
}

bool Network::reachable(NodeId id) const {
    return node(id).status == NodeStatus::kAlive;
}

std::set<NodeId> Network::live_nodes() const {
    std::set<NodeId> live;
    for (const auto& n : nodes_) {
        if (n.status != NodeStatus::kFailed) live.insert(n.node_id);
    }
    return live;
}

std::uint64_t Network::total_bytes() const noexcept {
    std::uint64_t total = 0;
    for (const auto& n : nodes_) total += n.traffic.bytes_sent;
    return total;
}

std::vector<chain::Transaction> synthetic_transactions(NodeId creator, chain::Timestamp now, Rng& rng) {
    std::uniform_int_distribution<std::uint64_t> channel(0, 3);
    std::uniform_int_distribution<std::size_t> count(1, 3);
    std::uniform_int_distribution<std::size_t> length(4, 12);
    std::uniform_int_distribution<unsigned> byte(0, 255);

    chain::Transaction tx;
    tx.sensor_id = creator * 16 + channel(rng);
    tx.t0 = now;
    const auto readings = count(rng);
    tx.step = readings > 1 ? 250 : 0;
    for (std::size_t i = 0; i < readings; ++i) {
        chain::Bytes reading(length(rng));
        for (auto& b : reading) b = static_cast<std::uint8_t>(byte(rng));
        tx.readings.push_back(std::move(reading));
    }
    tx.payload_encrypted = (rng() & 1) != 0;
    return {std::move(tx)};
}

bool Network::recover(NodeState& target, std::uint64_t iteration, std::vector<Event>& events) {
    const auto* entry = find_entry(schedule_, target.node_id);
    std::vector<NodeState> neighbors;
    for (auto id : entry->neighbor_ids) {
        if (reachable(id)) neighbors.push_back(node(id));
    }
    if (neighbors.empty()) {
        events.push_back({iteration, target.node_id, "recover", "no-neighbors", 0, std::nullopt, std::nullopt});
        return false;
    }

    // Every neighbor ships its current window.
    std::uint64_t bytes = 0;
    for (const auto& n : neighbors) {
        const auto size = chain::encoded_size(std::span<const Block>{n.chain.blocks});
        auto& sender = mutable_node(n.node_id);
        sender.traffic.bytes_sent += size;
        sender.traffic.messages_sent += 1;
        target.traffic.bytes_received += size;
        target.traffic.messages_received += 1;
        bytes += size;
    }
    auto restored = recover_node(target, neighbors, config_.pruning);
    target.chain = std::move(restored.chain);
    target.status = NodeStatus::kAlive;
    events.push_back(
        {iteration, target.node_id, "recover", "ok", bytes, std::nullopt, target.chain.tip().header.global_index});
    return true;
}

void Network::deliver(NodeId from, NodeState& to, const Message& message, const TurnContext& turn,
                      std::vector<Event>& events) {
    auto& sender = mutable_node(from);
    const auto size = wire_size(message);
    const auto index = std::visit(
        [](const auto& p) -> std::uint64_t {
            if constexpr (std::is_same_v<std::decay_t<decltype(p)>, Block>) {
                return p.header.global_index;
            } else {
                return p.back().header.global_index;
            }
        },
        message.payload);

    auto transmit = [&] {
        sender.traffic.bytes_sent += size;
        sender.traffic.messages_sent += 1;
        to.traffic.bytes_received += size;
        to.traffic.messages_received += 1;
        events.push_back({turn.iteration, from, "send", "ok", size, to.node_id, index});
    };
    auto reply = [&](const Verdict& v) {
        to.traffic.bytes_sent += kReplySize;
        to.traffic.messages_sent += 1;
        sender.traffic.bytes_received += kReplySize;
        sender.traffic.messages_received += 1;
        events.push_back(
            {turn.iteration, to.node_id, "reply", v.accepted ? "ack" : "nack", kReplySize, from, index});
    };
    auto receive = [&] {
        auto verdict = handle_incoming(to, message, turn);
        events.push_back({turn.iteration, to.node_id, "receive",
                          verdict.accepted ? std::string{"accepted"} : rejected(*verdict.reason), 0, from, index});
        if (verdict.accepted && !verdict.pruned.empty()) {
            events.push_back({turn.iteration, to.node_id, "prune", "ok", 0, std::nullopt,
                              verdict.pruned.back().header.global_index});
        }
        reply(verdict);
        return verdict;
    };

    transmit();
    const auto verdict = receive();
    if (verdict.accepted) return;
    // A receiver that fell behind or diverged resyncs with its neighbors and
    // takes the proposal once more.
    if (verdict.reason == RejectReason::kBadLinkage || verdict.reason == RejectReason::kStale) {
        if (recover(to, turn.iteration, events)) {
            transmit();
            receive();
        }
    }
}

std::vector<Event> Network::step_iteration(std::uint64_t iteration, Rng& rng) {
    std::vector<Event> events;
    const auto& entry = entry_for_iteration(schedule_, iteration);
    const TurnContext turn{iteration, entry.node_id, config_.pruning};

    for (auto& n : nodes_) {
        const auto next = config_.failures.status_at(n.node_id, iteration);
        if (next == n.status) continue;
        const auto previous = n.status;
        n.status = next;
        events.push_back({iteration, n.node_id, "status", std::string{to_string(next)}, 0, std::nullopt,
                          std::nullopt});
        if (next == NodeStatus::kAlive && previous != NodeStatus::kAlive) recover(n, iteration, events);
    }

    const auto now = config_.genesis_time + iteration * config_.tick_ms;
    for (const auto& inj : config_.injections) {
        if (inj.iteration != iteration) continue;
        const auto& sender = node(inj.sender);
        Message message{inj.sender, chain::make_block(sender.chain.tip(), inj.sender, now, {}, capacity_,
                                                      config_.algorithm)};
        events.push_back({iteration, inj.sender, "inject", "ok", 0, inj.target,
                          std::get<Block>(message.payload).header.global_index});
        deliver(inj.sender, mutable_node(inj.target), message, turn, events);
    }

    auto& creator = mutable_node(entry.node_id);
    const auto next_index = creator.chain.tip().header.global_index + 1;
    if (creator.status == NodeStatus::kFailed) {
        ledger_.record_missed_turn(next_index, creator.node_id);
        events.push_back({iteration, creator.node_id, "skip", "failed", 0, std::nullopt, next_index});
    } else {
        auto block = chain::make_block(creator.chain.tip(), creator.node_id, now,
                                       synthetic_transactions(creator.node_id, now, rng), capacity_,
                                       config_.algorithm);
        auto rolled = chain::roll_forward(creator.chain, block, config_.pruning);
        creator.chain = std::move(rolled.chain);
        events.push_back({iteration, creator.node_id, "create", "ok", 0, std::nullopt, next_index});
        if (!rolled.deleted.empty()) {
            events.push_back({iteration, creator.node_id, "prune", "ok", 0, std::nullopt,
                              rolled.deleted.back().header.global_index});
        }

        if (creator.status == NodeStatus::kAlive) {
            for (auto id : entry.neighbor_ids) {
                if (!reachable(id)) continue;
                const Message message =
                    config_.variant == DisseminationVariant::kSingleBlock
                        ? Message{creator.node_id, block}
                        : Message{creator.node_id, node(creator.node_id).chain.blocks};
                deliver(creator.node_id, mutable_node(id), message, turn, events);
            }
        }
    }

    for (const auto& n : nodes_) {
        if (n.status != NodeStatus::kFailed) ledger_.observe(n);
    }
    return events;
}

ProtocolRun run_protocol(const Schedule& schedule, const ProtocolConfig& config, Rng& rng) {
    Network network(schedule, config);
    ProtocolRun run;
    std::uint64_t cumulative = 0;
    for (std::uint64_t k = 1; k <= network.total_turns(); ++k) {
        auto events = network.step_iteration(k, rng);
        run.events.insert(run.events.end(), std::make_move_iterator(events.begin()),
                          std::make_move_iterator(events.end()));
        const auto total = network.total_bytes();
        run.traffic.push_back({k, total - cumulative, total});
        cumulative = total;
    }
    run.resultant = network.ledger().finalize(network.live_nodes());
    run.nodes = network.nodes();
    return run;
}

chain::FullChain assemble_resultant(const ResultantChain& resultant, std::size_t capacity,
                                    chain::HashAlgorithm algorithm) {
    return chain::assemble_full_chain(chain::split_into_cycles(resultant.accepted, capacity), algorithm);
}

}  // namespace rollchain::consensus
