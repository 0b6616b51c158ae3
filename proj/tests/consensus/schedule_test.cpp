// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <rollchain/consensus/errors.hpp>
#include <rollchain/consensus/schedule.hpp>
#include <rollchain/netsim/graph.hpp>

namespace rollchain::consensus {
namespace {

TEST(BuildSchedule, SixFullyConnected) {
    const auto ids = sequential_ids(6);
    const auto s = build_schedule(ids, netsim::Graph::complete(6));
    ASSERT_EQ(s.size(), 6u);
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_EQ(s[i].node_id, i + 1);
        EXPECT_EQ(s[i].activation_time, i + 1);
        EXPECT_EQ(s[i].neighbor_ids.size(), 5u);
        for (auto n : s[i].neighbor_ids) EXPECT_NE(n, s[i].node_id);
    }
}

TEST(BuildSchedule, SingleNode) {
    const std::vector<NodeId> ids{42};
    const auto s = build_schedule(ids, netsim::Graph{1});
    ASSERT_EQ(s.size(), 1u);
    EXPECT_TRUE(s[0].neighbor_ids.empty());
}

TEST(BuildSchedule, RingOfFour) {
    const auto s = build_schedule(sequential_ids(4), netsim::Graph::ring(4));
    for (const auto& e : s) EXPECT_EQ(e.neighbor_ids.size(), 2u);
    EXPECT_EQ(s[0].neighbor_ids, (std::vector<NodeId>{2, 4}));
}

TEST(BuildSchedule, OrdersByIdAndKeepsTimesIncreasing) {
    const std::vector<NodeId> ids{30, 10, 20};
    netsim::Graph g{3};
    g.add_edge(0, 1);  // 30 - 10
    g.add_edge(1, 2);  // 10 - 20
    const auto s = build_schedule(ids, g);
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[0].node_id, 10u);
    EXPECT_EQ(s[0].neighbor_ids, (std::vector<NodeId>{20, 30}));
    EXPECT_EQ(s[2].neighbor_ids, (std::vector<NodeId>{10}));
    for (std::size_t i = 1; i < s.size(); ++i) EXPECT_LT(s[i - 1].activation_time, s[i].activation_time);
}

TEST(BuildSchedule, DuplicateId) {
    const std::vector<NodeId> ids{1, 2, 1};
    try {
        (void)build_schedule(ids, netsim::Graph::complete(3));
        FAIL();
    } catch (const ConsensusError& e) {
        EXPECT_EQ(e.code(), ConsensusErrc::kDuplicateId);
    }
}

TEST(EntryForIteration, RoundRobin) {
    const auto s = build_schedule(sequential_ids(3), netsim::Graph::complete(3));
    EXPECT_EQ(entry_for_iteration(s, 1).node_id, 1u);
    EXPECT_EQ(entry_for_iteration(s, 3).node_id, 3u);
    EXPECT_EQ(entry_for_iteration(s, 4).node_id, 1u);
    EXPECT_EQ(entry_for_iteration(s, 8).node_id, 2u);
    EXPECT_THROW((void)entry_for_iteration(s, 0), ConsensusError);
    EXPECT_EQ(find_entry(s, 2)->activation_time, 2u);
    EXPECT_EQ(find_entry(s, 9), nullptr);
}

}  // namespace
}  // namespace rollchain::consensus
