// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include <rollchain/chain/types.hpp>

namespace rollchain::chain {

// Wire layout, all integers big-endian:
//
//   block       := "RBC1" global_index:u64 cycle_index:u64 index_in_cycle:u64
//                  creator_id:u64 created_at:u64 prev_hash:32 hash:32
//                  tx_count:u32 transaction*
//   transaction := sensor_id:u64 t0:u64 step:u64 reading_count:u32
//                  (length:u32 bytes)* payload_encrypted:u8
//
// The hash preimage is the same layout without cycle_index, index_in_cycle and hash.

inline constexpr std::array<std::uint8_t, 4> kBlockMagic{'R', 'B', 'C', '1'};

Bytes hash_preimage(const BlockHeader& header, std::span<const Transaction> transactions);

Bytes encode_block(const Block& block);
std::size_t encoded_size(const Block& block) noexcept;
std::size_t encoded_size(std::span<const Block> blocks) noexcept;

//! Decodes one block from the front of `input` and advances it past the block.
Block decode_block(std::span<const std::uint8_t>& input);

Bytes encode_chain(std::span<const Block> blocks);
std::vector<Block> decode_chain(std::span<const std::uint8_t> input);

void write_chain_file(const std::filesystem::path& path, std::span<const Block> blocks);
std::vector<Block> read_chain_file(const std::filesystem::path& path);

}  // namespace rollchain::chain
