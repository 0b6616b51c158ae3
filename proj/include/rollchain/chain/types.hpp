// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace rollchain::chain {

using Bytes = std::vector<std::uint8_t>;
using Digest = std::array<std::uint8_t, 32>;
using NodeId = std::uint64_t;
using Timestamp = std::uint64_t;  // milliseconds

inline constexpr Digest kZeroDigest{};

//! One sensor's measurements. A multi-segment transaction carries several
//! readings spaced `step` milliseconds apart starting at `t0`.
struct Transaction {
    std::uint64_t sensor_id{0};
    Timestamp t0{0};
    std::uint64_t step{0};
    std::vector<Bytes> readings;
    bool payload_encrypted{false};

    //! Implied time of the k-th reading.
    [[nodiscard]] Timestamp measurement_time(std::size_t k) const noexcept { return t0 + k * step; }

    friend bool operator==(const Transaction&, const Transaction&) = default;
};

//! cycle_index and index_in_cycle are bookkeeping: they are stored but not hashed,
//! so a block carried over into the next cycle keeps its identity.
struct BlockHeader {
    std::uint64_t global_index{0};
    std::uint64_t cycle_index{0};
    std::uint64_t index_in_cycle{0};
    NodeId creator_id{0};
    Timestamp created_at{0};
    Digest prev_hash{};
    Digest hash{};

    friend bool operator==(const BlockHeader&, const BlockHeader&) = default;
};

struct Block {
    BlockHeader header;
    std::vector<Transaction> transactions;

    friend bool operator==(const Block&, const Block&) = default;
};

//! Throws ChainError(kInvalidTransaction) if readings are empty or a
//! multi-reading transaction has a zero step.
void check_transaction(const Transaction& tx);

}  // namespace rollchain::chain
