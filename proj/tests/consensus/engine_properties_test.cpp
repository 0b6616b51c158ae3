// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

// Randomized checks over many seeds, topologies and failure plans.

#include <gtest/gtest.h>

#include <rollchain/chain/validation.hpp>
#include <rollchain/consensus/engine.hpp>
#include <rollchain/netsim/generators.hpp>

namespace rollchain::consensus {
namespace {

using chain::PruningMode;

constexpr int kTrials = 40;

struct Scenario {
    Schedule schedule;
    ProtocolConfig config;
};

Scenario random_scenario(Rng& gen, bool with_failures, bool with_injections, bool complete = false) {
    const std::size_t n = 3 + gen() % 6;
    const auto max_edges = n * (n - 1) / 2;
    netsim::Engine topo{gen()};
    auto graph = netsim::gen_random_graph(n, complete ? max_edges : gen() % (max_edges + 1), topo);
    // A spanning path keeps every run connected.
    for (std::size_t v = 1; v < n; ++v) graph.add_edge(v - 1, v);
    Scenario s;
    s.schedule = build_schedule(sequential_ids(n), graph);
    s.config.cycles = 1 + gen() % 3;
    s.config.pruning = (gen() & 1) ? PruningMode::kReset : PruningMode::kSliding;
    const auto turns = n * s.config.cycles;
    if (with_failures) {
        for (std::uint64_t k = 1; k <= turns; ++k) {
            if (gen() % 5 == 0) {
                s.config.failures.set(1 + gen() % n, k, (gen() & 1) ? NodeStatus::kFailed : NodeStatus::kIsolated);
            }
        }
    }
    if (with_injections) {
        for (int i = 0; i < 4; ++i) {
            const std::uint64_t k = 1 + gen() % turns;
            const NodeId scheduled = (k - 1) % n + 1;
            NodeId sender = 1 + gen() % n;
            if (sender == scheduled) sender = sender % n + 1;
            s.config.injections.push_back({k, sender, static_cast<NodeId>(1 + gen() % n)});
        }
    }
    return s;
}

std::vector<chain::Digest> hashes(const std::vector<Block>& blocks) {
    std::vector<chain::Digest> out;
    for (const auto& b : blocks) out.push_back(b.header.hash);
    return out;
}

// Only a creator's direct neighbors hear a block, so both claims need every
// node to neighbor every creator.
TEST(EngineProperties, VariantsAgreeOnAcceptedChain) {
    Rng gen{101};
    for (int t = 0; t < kTrials; ++t) {
        auto s = random_scenario(gen, false, false, true);
        const auto seed = gen();
        s.config.variant = DisseminationVariant::kFullChain;
        Rng ra{seed};
        const auto a = run_protocol(s.schedule, s.config, ra);
        s.config.variant = DisseminationVariant::kSingleBlock;
        Rng rb{seed};
        const auto b = run_protocol(s.schedule, s.config, rb);
        EXPECT_EQ(hashes(a.resultant.accepted), hashes(b.resultant.accepted)) << "trial " << t;
        EXPECT_EQ(a.resultant.lost, b.resultant.lost) << "trial " << t;
    }
}

TEST(EngineProperties, ConnectedHealthyNetworkLosesNothing) {
    Rng gen{102};
    for (int t = 0; t < kTrials; ++t) {
        auto s = random_scenario(gen, false, false, true);
        s.config.variant = (gen() & 1) ? DisseminationVariant::kFullChain : DisseminationVariant::kSingleBlock;
        Rng rng{gen()};
        const auto run = run_protocol(s.schedule, s.config, rng);
        EXPECT_TRUE(run.resultant.lost.empty()) << "trial " << t;
        EXPECT_EQ(run.resultant.accepted.size(), s.schedule.size() * s.config.cycles + 1);
    }
}

TEST(EngineProperties, InjectedBlocksNeverEnterAnyChain) {
    Rng gen{103};
    for (int t = 0; t < kTrials; ++t) {
        auto s = random_scenario(gen, (gen() & 1) != 0, true);
        s.config.variant = (gen() & 1) ? DisseminationVariant::kFullChain : DisseminationVariant::kSingleBlock;
        Rng rng{gen()};
        const auto run = run_protocol(s.schedule, s.config, rng);
        const auto n = s.schedule.size();

        // Injected blocks carry no transactions; scheduled ones always carry one.
        for (const auto& node : run.nodes) {
            for (const auto& b : node.chain.blocks) {
                if (b.header.global_index == 0) continue;
                EXPECT_FALSE(b.transactions.empty()) << "trial " << t << " node " << node.node_id;
            }
        }
        for (const auto& b : run.resultant.accepted) {
            if (b.header.global_index == 0) continue;
            EXPECT_FALSE(b.transactions.empty());
        }
        for (std::size_t i = 0; i < run.events.size(); ++i) {
            const auto& e = run.events[i];
            if (e.action != "receive") continue;
            const NodeId scheduled = (e.iteration - 1) % n + 1;
            if (*e.peer != scheduled) EXPECT_NE(e.outcome, "accepted") << "trial " << t;
        }
    }
}

TEST(EngineProperties, EveryWindowStaysValid) {
    Rng gen{104};
    for (int t = 0; t < kTrials; ++t) {
        auto s = random_scenario(gen, true, true);
        s.config.variant = (gen() & 1) ? DisseminationVariant::kFullChain : DisseminationVariant::kSingleBlock;
        Network net(s.schedule, s.config);
        Rng rng{gen()};
        for (std::uint64_t k = 1; k <= net.total_turns(); ++k) {
            net.step_iteration(k, rng);
            for (const auto& node : net.nodes()) {
                EXPECT_TRUE(chain::validate_chain(node.chain).empty()) << "trial " << t << " iteration " << k;
                EXPECT_LE(node.chain.size(), net.capacity() + 1);
            }
        }
    }
}

TEST(EngineProperties, Deterministic) {
    Rng gen{105};
    for (int t = 0; t < 10; ++t) {
        auto s = random_scenario(gen, true, true);
        const auto seed = gen();
        Rng r1{seed}, r2{seed};
        const auto a = run_protocol(s.schedule, s.config, r1);
        const auto b = run_protocol(s.schedule, s.config, r2);
        EXPECT_EQ(a.events, b.events);
        EXPECT_EQ(a.nodes, b.nodes);
        EXPECT_EQ(a.resultant.accepted, b.resultant.accepted);
        EXPECT_EQ(a.resultant.lost, b.resultant.lost);
    }
}

TEST(EngineProperties, AcceptedChainIsLinked) {
    Rng gen{106};
    for (int t = 0; t < 4 * kTrials; ++t) {
        auto s = random_scenario(gen, true, (gen() & 1) != 0);
        s.config.variant = (gen() & 1) ? DisseminationVariant::kFullChain : DisseminationVariant::kSingleBlock;
        Rng rng{gen()};
        const auto run = run_protocol(s.schedule, s.config, rng);
        const auto& acc = run.resultant.accepted;
        for (std::size_t i = 1; i < acc.size(); ++i) {
            EXPECT_EQ(acc[i].header.global_index, acc[i - 1].header.global_index + 1) << "trial " << t;
            EXPECT_EQ(acc[i].header.prev_hash, acc[i - 1].header.hash) << "trial " << t;
        }
    }
}

}  // namespace
}  // namespace rollchain::consensus
