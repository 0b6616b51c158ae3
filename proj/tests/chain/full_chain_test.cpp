// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <rollchain/chain/errors.hpp>
#include <rollchain/chain/full_chain.hpp>
#include <rollchain/chain/validation.hpp>

#include "../support/builders.hpp"

namespace rollchain::chain {
namespace {

using rollchain::testing::reference_history;

// Replays a history through a reset window and collects each completed window.
std::vector<CycleRecord> reset_replay(const std::vector<Block>& history, std::size_t capacity) {
    std::vector<CycleRecord> records;
    LocalChain window = make_chain(history.front(), capacity);
    for (std::size_t i = 1; i < history.size(); ++i) {
        auto rolled = roll_forward(window, history[i], PruningMode::kReset);
        if (!rolled.deleted.empty()) records.push_back(window.blocks);
        window = std::move(rolled.chain);
    }
    if (window.size() > 1) records.push_back(window.blocks);
    return records;
}

ChainErrc assemble_error(std::vector<CycleRecord> records) {
    try {
        (void)assemble_full_chain(std::move(records));
    } catch (const ChainError& e) {
        return e.code();
    }
    ADD_FAILURE() << "assembled";
    return ChainErrc::kIo;
}

TEST(AssembleFullChain, OneCycle) {
    const auto h = reference_history(4, 4, 31);
    const auto full = assemble_full_chain({h});
    EXPECT_EQ(full.genesis, h[0]);
    EXPECT_EQ(full.blocks(), h);
    ASSERT_EQ(full.matrix().size(), 1u);
    EXPECT_EQ(full.matrix()[0].size(), 4u);
    EXPECT_TRUE(validate_chain(full).empty());
}

TEST(AssembleFullChain, TwoCycleReplayOverlaps) {
    const auto h = reference_history(10, 5, 32);
    const auto records = reset_replay(h, 5);
    ASSERT_EQ(records.size(), 2u);
    // Eq-(2)-style overlap, checked by the test on its own.
    EXPECT_EQ(records[0].back().header.hash, records[1].front().header.hash);
    const auto full = assemble_full_chain(records);
    EXPECT_TRUE(validate_chain(full).empty());
    ASSERT_EQ(full.blocks().size(), h.size());
    for (std::size_t i = 0; i < h.size(); ++i) EXPECT_EQ(full.blocks()[i].header.hash, h[i].header.hash);
}

TEST(AssembleFullChain, PerturbedOpeningBlock) {
    const auto h = reference_history(10, 5, 33);
    auto records = reset_replay(h, 5);
    records[1].front().header.hash[0] ^= 0x80;
    EXPECT_NE(assemble_error(records), ChainErrc::kIo);
}

TEST(AssembleFullChain, DisagreeingCarryIsOverlapViolation) {
    const auto a = reference_history(5, 5, 34);
    const auto b = reference_history(10, 5, 35);
    // Second record is internally valid but opens on a different block 5.
    std::vector<CycleRecord> records{a, CycleRecord(b.begin() + 5, b.end())};
    EXPECT_EQ(assemble_error(records), ChainErrc::kOverlapViolation);
}

TEST(AssembleFullChain, BrokenRecordIsLinkageViolation) {
    auto h = reference_history(5, 5, 36);
    h.erase(h.begin() + 2);
    EXPECT_EQ(assemble_error({h}), ChainErrc::kLinkageViolation);
}

TEST(SplitIntoCycles, MatchesResetReplay) {
    for (std::size_t count : {1u, 5u, 6u, 11u, 15u}) {
        const auto h = reference_history(count, 5, 37 + count);
        const auto split = split_into_cycles(h, 5);
        const auto replay = reset_replay(h, 5);
        EXPECT_EQ(split, replay) << count << " blocks";
    }
}

}  // namespace
}  // namespace rollchain::chain
