// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <rollchain/chain/hashing.hpp>
#include <rollchain/chain/types.hpp>

namespace rollchain::chain {

//! The window of blocks a node keeps. `capacity` is the number of blocks per
//! cycle; the window never exceeds capacity + 1 (the cycle plus its carry-over).
struct LocalChain {
    std::vector<Block> blocks;
    std::size_t capacity{0};
    HashAlgorithm algorithm{HashAlgorithm::kSha256};

    [[nodiscard]] bool empty() const noexcept { return blocks.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return blocks.size(); }
    [[nodiscard]] const Block& tip() const;

    //! Block with the given global index if it is inside the window.
    [[nodiscard]] const Block* find(std::uint64_t global_index) const noexcept;

    friend bool operator==(const LocalChain&, const LocalChain&) = default;
};

enum class PruningMode {
    kReset,    // clear the cycle, keep only its last block as the next genesis
    kSliding,  // drop the oldest block for every new one
};

std::string_view to_string(PruningMode mode) noexcept;
std::optional<PruningMode> parse_pruning_mode(std::string_view name) noexcept;

//! Genesis: no transactions, zero prev_hash, global index 0.
Block make_genesis(Timestamp created_at, HashAlgorithm algorithm = HashAlgorithm::kSha256);

LocalChain make_chain(Block genesis, std::size_t capacity,
                      HashAlgorithm algorithm = HashAlgorithm::kSha256);

//! Builds and seals the successor of `tip`. Bookkeeping continues the tip's
//! cycle, or opens the next cycle when the tip closed one.
Block make_block(const Block& tip, NodeId creator, Timestamp created_at,
                 std::vector<Transaction> transactions, std::size_t capacity,
                 HashAlgorithm algorithm = HashAlgorithm::kSha256);

//! Recomputes header.hash from the block contents.
void seal(Block& block, HashAlgorithm algorithm = HashAlgorithm::kSha256);

//! Throws BadLinkage, BadIndex or BadHash (checked in that order) unless `next`
//! is a valid successor of `tip`.
void check_successor(const Block& tip, const Block& next, HashAlgorithm algorithm);

//! Appends a block; the input chain is left untouched on error.
LocalChain append_block(LocalChain chain, const Block& block);

struct ResetResult {
    LocalChain chain;
    std::vector<Block> deleted;
};

//! Requires a complete cycle (capacity + 1 blocks). Keeps only the tip,
//! relabelled as index 0 of the next cycle; its hash is unchanged.
ResetResult prune_reset(LocalChain chain);

struct SlideResult {
    LocalChain chain;
    Block deleted;
};

//! Requires at least `capacity` blocks. Drops the oldest block and appends `new_block`.
SlideResult prune_sliding(LocalChain chain, const Block& new_block);

struct RollResult {
    LocalChain chain;
    std::vector<Block> deleted;
};

//! Appends under the given pruning discipline: a reset window whose tip closes
//! a cycle is cleared down to that tip first, a sliding window at capacity drops
//! its oldest block.
RollResult roll_forward(LocalChain chain, const Block& block, PruningMode mode);

}  // namespace rollchain::chain
