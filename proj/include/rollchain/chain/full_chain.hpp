// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include <rollchain/chain/hashing.hpp>
#include <rollchain/chain/types.hpp>

namespace rollchain::chain {

using CycleRecord = std::vector<Block>;

//! The complete chain as kept by the aggregator. Each cycle record starts with
//! its genesis (the first record) or carry-over block, which is the same block
//! (by hash) as the last block of the previous record.
struct FullChain {
    Block genesis;
    std::vector<CycleRecord> cycles;
    HashAlgorithm algorithm{HashAlgorithm::kSha256};

    //! Every distinct block once, in global order.
    [[nodiscard]] std::vector<Block> blocks() const;

    //! One row per cycle with the leading genesis/carry-over block left out.
    [[nodiscard]] std::vector<std::vector<Block>> matrix() const;
};

//! Throws LinkageViolation if a record is not internally linked and gapless,
//! OverlapViolation if adjacent records disagree on their shared block.
FullChain assemble_full_chain(std::vector<CycleRecord> cycle_records,
                              HashAlgorithm algorithm = HashAlgorithm::kSha256);

//! Cuts a linear history into reset-style cycle records of `capacity` new blocks
//! each, relabelling bookkeeping the way prune_reset would. The last record may
//! be partial.
std::vector<CycleRecord> split_into_cycles(std::span<const Block> history, std::size_t capacity);

}  // namespace rollchain::chain
