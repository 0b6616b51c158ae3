// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <rollchain/chain/errors.hpp>
#include <rollchain/chain/local_chain.hpp>
#include <rollchain/chain/validation.hpp>

#include "../support/builders.hpp"

namespace rollchain::chain {
namespace {

using rollchain::testing::reference_history;

LocalChain chain_of(const std::vector<Block>& blocks, std::size_t capacity) {
    LocalChain c = make_chain(blocks.front(), capacity);
    for (std::size_t i = 1; i < blocks.size(); ++i) c = append_block(std::move(c), blocks[i]);
    return c;
}

ChainErrc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const ChainError& e) {
        return e.code();
    }
    ADD_FAILURE() << "no ChainError thrown";
    return ChainErrc::kIo;
}

TEST(Genesis, Shape) {
    const auto g = make_genesis(42);
    EXPECT_EQ(g.header.global_index, 0u);
    EXPECT_EQ(g.header.index_in_cycle, 0u);
    EXPECT_EQ(g.header.prev_hash, kZeroDigest);
    EXPECT_EQ(g.header.created_at, 42u);
    EXPECT_TRUE(g.transactions.empty());
    EXPECT_EQ(g.header.hash, hash_block(g));
}

TEST(MakeChain, RejectsZeroCapacity) {
    EXPECT_THROW(make_chain(make_genesis(0), 0), std::invalid_argument);
}

TEST(MakeBlock, BookkeepingWrapsAtCapacity) {
    const auto h = reference_history(7, 3, 1);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> got;
    for (const auto& b : h) got.emplace_back(b.header.cycle_index, b.header.index_in_cycle);
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> want{{0, 0}, {0, 1}, {0, 2}, {0, 3},
                                                                     {1, 1}, {1, 2}, {1, 3}, {2, 1}};
    EXPECT_EQ(got, want);
}

TEST(AppendBlock, GenesisPlusOne) {
    const auto h = reference_history(1, 4, 2);
    const auto c = chain_of(h, 4);
    EXPECT_EQ(c.size(), 2u);
    EXPECT_EQ(c.tip(), h[1]);
}

TEST(AppendBlock, RandomPrevHashIsBadLinkage) {
    const auto h = reference_history(3, 6, 3);
    auto c = chain_of({h.begin(), h.begin() + 3}, 6);
    auto bad = h[3];
    bad.header.prev_hash.fill(0x5A);
    seal(bad);
    EXPECT_EQ(code_of([&] { (void)append_block(c, bad); }), ChainErrc::kBadLinkage);
    EXPECT_EQ(c.size(), 3u);
}

TEST(AppendBlock, SkippedIndexIsBadIndex) {
    const auto h = reference_history(2, 6, 4);
    auto c = chain_of({h.begin(), h.begin() + 2}, 6);
    auto bad = h[2];
    bad.header.global_index = 5;
    seal(bad);
    EXPECT_EQ(code_of([&] { (void)append_block(c, bad); }), ChainErrc::kBadIndex);
}

TEST(AppendBlock, TamperedPayloadIsBadHash) {
    const auto h = reference_history(2, 6, 5);
    auto c = chain_of({h.begin(), h.begin() + 2}, 6);
    auto bad = h[2];
    bad.header.created_at += 1;
    EXPECT_EQ(code_of([&] { (void)append_block(c, bad); }), ChainErrc::kBadHash);
}

TEST(AppendBlock, InvalidTransactionRejected) {
    const auto h = reference_history(1, 6, 6);
    auto c = chain_of(h, 6);
    auto next = make_block(c.tip(), 2, 99, {Transaction{1, 0, 250, {{1}, {2}}, false}}, 6);
    next.transactions[0].step = 0;  // two readings need a step
    seal(next);
    EXPECT_EQ(code_of([&] { (void)append_block(c, next); }), ChainErrc::kInvalidTransaction);
}

TEST(AppendBlock, FullWindowRefuses) {
    const auto h = reference_history(3, 2, 7);
    const auto c = chain_of({h.begin(), h.begin() + 3}, 2);
    EXPECT_EQ(code_of([&] { (void)append_block(c, h[3]); }), ChainErrc::kWindowFull);
}

TEST(PruneReset, CapacityFive) {
    const auto h = reference_history(6, 5, 8);
    const auto c = chain_of({h.begin(), h.begin() + 6}, 5);
    const auto r = prune_reset(c);
    ASSERT_EQ(r.chain.size(), 1u);
    const auto& carry = r.chain.tip();
    EXPECT_EQ(carry.header.hash, h[5].header.hash);
    EXPECT_EQ(carry.header.global_index, 5u);
    EXPECT_EQ(carry.header.index_in_cycle, 0u);
    EXPECT_EQ(carry.header.cycle_index, h[5].header.cycle_index + 1);
    EXPECT_EQ(r.deleted, std::vector<Block>(h.begin(), h.begin() + 5));
}

TEST(PruneReset, CapacityOne) {
    const auto h = reference_history(1, 1, 9);
    const auto r = prune_reset(chain_of(h, 1));
    ASSERT_EQ(r.chain.size(), 1u);
    EXPECT_EQ(r.chain.tip().header.hash, h[1].header.hash);
    EXPECT_EQ(r.deleted, std::vector<Block>{h[0]});
}

TEST(PruneReset, IncompleteCycle) {
    const auto h = reference_history(3, 5, 10);
    EXPECT_EQ(code_of([&] { (void)prune_reset(chain_of(h, 5)); }), ChainErrc::kCycleIncomplete);
}

TEST(PruneReset, NextBlockLinksToCarry) {
    const auto h = reference_history(7, 5, 11);
    auto r = prune_reset(chain_of({h.begin(), h.begin() + 6}, 5));
    const auto c = append_block(r.chain, h[6]);
    EXPECT_EQ(c.size(), 2u);
    EXPECT_EQ(c.tip().header.prev_hash, h[5].header.hash);
    EXPECT_TRUE(validate_chain(c).empty());
}

TEST(PruneSliding, WindowOfFive) {
    const auto h = reference_history(5, 5, 12);
    // [B0..B4] holds capacity blocks; B5 pushes B0 out.
    const auto c = chain_of({h.begin(), h.begin() + 5}, 5);
    const auto r = prune_sliding(c, h[5]);
    EXPECT_EQ(r.deleted, h[0]);
    EXPECT_EQ(r.chain.blocks, std::vector<Block>(h.begin() + 1, h.end()));
}

TEST(PruneSliding, CapacityOne) {
    const auto h = reference_history(4, 1, 13);
    LocalChain c = make_chain(h[3], 1);
    const auto r = prune_sliding(c, h[4]);
    EXPECT_EQ(r.chain.blocks, std::vector<Block>{h[4]});
    EXPECT_EQ(r.deleted, h[3]);
}

TEST(PruneSliding, BelowCapacity) {
    const auto h = reference_history(3, 5, 14);
    const auto c = chain_of({h.begin(), h.begin() + 3}, 5);
    EXPECT_EQ(code_of([&] { (void)prune_sliding(c, h[3]); }), ChainErrc::kNotAtCapacity);
}

TEST(PruneSliding, BadSuccessor) {
    const auto h = reference_history(6, 5, 15);
    const auto c = chain_of({h.begin(), h.begin() + 5}, 5);
    // B6 does not link to B4: linkage is checked before the index.
    EXPECT_EQ(code_of([&] { (void)prune_sliding(c, h[6]); }), ChainErrc::kBadLinkage);
}

TEST(PruningModeNames, RoundTrip) {
    EXPECT_EQ(parse_pruning_mode("reset"), PruningMode::kReset);
    EXPECT_EQ(parse_pruning_mode("sliding"), PruningMode::kSliding);
    EXPECT_FALSE(parse_pruning_mode("nope"));
}

TEST(RollForward, SlidingTwentyStepsMatchReference) {
    constexpr std::size_t kCapacity = 4;
    const auto h = reference_history(20, kCapacity, 16);
    LocalChain c = make_chain(h[0], kCapacity);
    for (std::size_t k = 1; k <= 20; ++k) {
        c = roll_forward(c, h[k], PruningMode::kSliding).chain;
        const auto first = k + 1 > kCapacity ? k + 1 - kCapacity : 0;
        ASSERT_EQ(c.blocks, std::vector<Block>(h.begin() + static_cast<long>(first), h.begin() + static_cast<long>(k) + 1))
            << "after step " << k;
    }
}

TEST(RollForward, ResetKeepsBoundAndLinkage) {
    constexpr std::size_t kCapacity = 3;
    const auto h = reference_history(10, kCapacity, 17);
    LocalChain c = make_chain(h[0], kCapacity);
    for (std::size_t k = 1; k <= 10; ++k) {
        c = roll_forward(c, h[k], PruningMode::kReset).chain;
        EXPECT_LE(c.size(), kCapacity + 1);
        EXPECT_TRUE(validate_chain(c).empty()) << "after step " << k;
    }
    // Steps 10 = 3*3 + 1: carry B9 then B10.
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c.blocks[0].header.hash, h[9].header.hash);
    EXPECT_EQ(c.blocks[1], h[10]);
}

TEST(RollForward, ResetClosesPartialWindowOnTip) {
    const auto h = reference_history(4, 3, 18);
    // Only the last two blocks of cycle 0 are held, the tip closes the cycle.
    LocalChain c = make_chain(h[2], 3);
    c = append_block(c, h[3]);
    const auto r = roll_forward(c, h[4], PruningMode::kReset);
    ASSERT_EQ(r.chain.size(), 2u);
    EXPECT_EQ(r.chain.blocks[0].header.index_in_cycle, 0u);
    EXPECT_EQ(r.chain.blocks[0].header.hash, h[3].header.hash);
    EXPECT_EQ(r.deleted.size(), 1u);
}

TEST(RollForward, BadBlockLeavesWindowUnpruned) {
    const auto h = reference_history(4, 3, 19);
    const auto c = chain_of({h.begin(), h.begin() + 4}, 3);
    auto bad = make_block(h[3], 9, 1, {}, 3);
    bad.header.prev_hash.fill(1);
    seal(bad);
    EXPECT_EQ(code_of([&] { (void)roll_forward(c, bad, PruningMode::kReset); }), ChainErrc::kBadLinkage);
}

}  // namespace
}  // namespace rollchain::chain
