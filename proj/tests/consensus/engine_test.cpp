// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <rollchain/chain/serialization.hpp>
#include <rollchain/chain/validation.hpp>
#include <rollchain/consensus/engine.hpp>
#include <rollchain/consensus/errors.hpp>

namespace rollchain::consensus {
namespace {

using chain::PruningMode;

Schedule six_complete() { return build_schedule(sequential_ids(6), netsim::Graph::complete(6)); }

ProtocolConfig config_for(DisseminationVariant variant, PruningMode pruning = PruningMode::kReset,
                          std::size_t cycles = 1) {
    ProtocolConfig c;
    c.variant = variant;
    c.pruning = pruning;
    c.cycles = cycles;
    return c;
}

class BothVariants : public ::testing::TestWithParam<DisseminationVariant> {};

TEST_P(BothVariants, SixNodeReplayFillsEveryWindow) {
    Network net(six_complete(), config_for(GetParam()));
    Rng rng{7};
    for (std::uint64_t k = 1; k <= 6; ++k) {
        net.step_iteration(k, rng);
        for (const auto& n : net.nodes()) {
            EXPECT_EQ(n.chain.size(), k + 1) << "node " << n.node_id << " after iteration " << k;
            EXPECT_EQ(n.chain.tip().header.creator_id, k);
        }
    }
    const auto r = net.ledger().finalize(net.live_nodes());
    EXPECT_EQ(r.accepted.size(), 7u);
    EXPECT_TRUE(r.lost.empty());
    for (const auto& n : net.nodes()) EXPECT_TRUE(chain::validate_chain(n.chain).empty());
    EXPECT_TRUE(chain::validate_chain(assemble_resultant(r, 6, chain::HashAlgorithm::kSha256)).empty());
}

TEST_P(BothVariants, NodeOffAtItsTurnLosesExactlyThatBlock) {
    for (auto status : {NodeStatus::kFailed, NodeStatus::kIsolated}) {
        auto config = config_for(GetParam());
        config.failures.set(3, 3, status);
        Rng rng{11};
        const auto run = run_protocol(six_complete(), config, rng);
        EXPECT_EQ(run.resultant.lost, (std::vector<LostBlock>{{3, 3}})) << to_string(status);
        EXPECT_EQ(run.resultant.accepted.size(), 6u);
        for (const auto& b : run.resultant.accepted) EXPECT_NE(b.header.creator_id, 3u);
    }
}

TEST_P(BothVariants, FailedNodeCatchesUpOnReturn) {
    auto config = config_for(GetParam());
    config.failures.set(2, 3, NodeStatus::kFailed);
    config.failures.set(2, 4, NodeStatus::kFailed);
    Rng rng{13};
    const auto run = run_protocol(six_complete(), config, rng);
    for (const auto& n : run.nodes) EXPECT_EQ(n.chain, run.nodes.front().chain);
    EXPECT_TRUE(run.resultant.lost.empty());
    EXPECT_EQ(run.resultant.accepted.size(), 7u);
    bool recovered = false;
    for (const auto& e : run.events) {
        recovered |= e.actor == 2 && e.action == "recover" && e.outcome == "ok" && e.iteration == 5;
    }
    EXPECT_TRUE(recovered);
}

INSTANTIATE_TEST_SUITE_P(Variants, BothVariants,
                         ::testing::Values(DisseminationVariant::kFullChain, DisseminationVariant::kSingleBlock),
                         [](const auto& info) {
                             return info.param == DisseminationVariant::kFullChain ? "FullChain" : "SingleBlock";
                         });

TEST(Traffic, FullChainCostsMoreFromSecondIteration) {
    Rng ra{5}, rb{5};
    const auto a = run_protocol(six_complete(), config_for(DisseminationVariant::kFullChain), ra);
    const auto b = run_protocol(six_complete(), config_for(DisseminationVariant::kSingleBlock), rb);
    ASSERT_EQ(a.traffic.size(), b.traffic.size());
    for (std::size_t i = 1; i < a.traffic.size(); ++i) {
        EXPECT_GT(a.traffic[i].bytes, b.traffic[i].bytes) << "iteration " << a.traffic[i].iteration;
    }
}

TEST(Traffic, SingleBlockIterationCost) {
    // Five deliveries of the new block, five replies.
    Network net(six_complete(), config_for(DisseminationVariant::kSingleBlock));
    Rng rng{3};
    const auto before = net.total_bytes();
    net.step_iteration(1, rng);
    const auto block = net.node(1).chain.tip();
    EXPECT_EQ(net.total_bytes() - before, 5 * (chain::encoded_size(block) + kReplySize));
}

TEST(Traffic, CountersNeverDecrease) {
    auto config = config_for(DisseminationVariant::kFullChain, PruningMode::kReset, 2);
    config.failures.set(4, 5, NodeStatus::kFailed);
    Network net(six_complete(), config);
    Rng rng{17};
    std::vector<TrafficCounters> last(6);
    for (std::uint64_t k = 1; k <= net.total_turns(); ++k) {
        net.step_iteration(k, rng);
        for (std::size_t i = 0; i < 6; ++i) {
            const auto& t = net.nodes()[i].traffic;
            EXPECT_GE(t.bytes_sent, last[i].bytes_sent);
            EXPECT_GE(t.bytes_received, last[i].bytes_received);
            last[i] = t;
        }
    }
}

TEST(MultiCycle, ResetRunsAssemble) {
    for (std::size_t cycles : {2u, 3u}) {
        Rng rng{21};
        const auto run = run_protocol(six_complete(), config_for(DisseminationVariant::kSingleBlock,
                                                                 PruningMode::kReset, cycles),
                                      rng);
        EXPECT_EQ(run.resultant.accepted.size(), 6 * cycles + 1);
        const auto full = assemble_resultant(run.resultant, 6, chain::HashAlgorithm::kSha256);
        EXPECT_EQ(full.cycles.size(), cycles);
        EXPECT_TRUE(chain::validate_chain(full).empty());
        for (const auto& n : run.nodes) EXPECT_LE(n.chain.size(), 7u);
    }
}

TEST(MultiCycle, SlidingRunAssembles) {
    Rng rng{22};
    const auto run =
        run_protocol(six_complete(), config_for(DisseminationVariant::kFullChain, PruningMode::kSliding, 3), rng);
    EXPECT_EQ(run.resultant.accepted.size(), 19u);
    EXPECT_TRUE(chain::validate_chain(assemble_resultant(run.resultant, 6, chain::HashAlgorithm::kSha256)).empty());
    for (const auto& n : run.nodes) {
        EXPECT_EQ(n.chain.size(), 6u);
        EXPECT_EQ(n.chain.tip().header.global_index, 18u);
    }
}

TEST(Recovery, NoReachableNeighbor) {
    // Two nodes; node 2 is off at iteration 1 and comes back while node 1 is isolated.
    auto config = config_for(DisseminationVariant::kSingleBlock, PruningMode::kReset, 2);
    config.failures.set(2, 1, NodeStatus::kFailed);
    config.failures.set(1, 2, NodeStatus::kIsolated);
    Rng rng{1};
    const auto run = run_protocol(build_schedule(sequential_ids(2), netsim::Graph::complete(2)), config, rng);
    bool saw = false;
    for (const auto& e : run.events) saw |= e.action == "recover" && e.outcome == "no-neighbors";
    EXPECT_TRUE(saw);
}

TEST(Config, Rejections) {
    auto expect_config_error = [](Schedule s, ProtocolConfig c) {
        try {
            Network net(std::move(s), std::move(c));
            ADD_FAILURE() << "accepted";
        } catch (const ConsensusError& e) {
            EXPECT_EQ(e.code(), ConsensusErrc::kConfigError);
        }
    };
    expect_config_error({}, {});
    ProtocolConfig c;
    c.cycles = 0;
    expect_config_error(six_complete(), c);
    c = {};
    c.tick_ms = 0;
    expect_config_error(six_complete(), c);
    c = {};
    c.failures.set(9, 1, NodeStatus::kFailed);
    expect_config_error(six_complete(), c);
    c = {};
    c.injections.push_back({2, 2, 5});  // node 2 owns iteration 2
    expect_config_error(six_complete(), c);
    c = {};
    c.injections.push_back({0, 2, 5});
    expect_config_error(six_complete(), c);
    c = {};
    c.injections.push_back({7, 2, 5});
    expect_config_error(six_complete(), c);
}

TEST(Genesis, CarriedBlockStartsTheNextCycle) {
    Rng rng{2};
    const auto first = run_protocol(six_complete(), config_for(DisseminationVariant::kSingleBlock), rng);
    auto config = config_for(DisseminationVariant::kSingleBlock);
    config.genesis = first.resultant.accepted.back();
    const auto second = run_protocol(six_complete(), config, rng);
    EXPECT_EQ(second.resultant.accepted.front().header.hash, first.resultant.accepted.back().header.hash);
    EXPECT_EQ(second.resultant.accepted.back().header.global_index, 12u);
    EXPECT_EQ(second.resultant.accepted.back().header.cycle_index, 1u);
}

}  // namespace
}  // namespace rollchain::consensus
