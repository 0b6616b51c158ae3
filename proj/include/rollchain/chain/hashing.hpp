// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <rollchain/chain/types.hpp>

namespace rollchain::chain {

enum class HashAlgorithm {
    kSha256,
    kSha3_256,
    kBlake2s256,
};

std::string_view to_string(HashAlgorithm algorithm) noexcept;
std::optional<HashAlgorithm> parse_hash_algorithm(std::string_view name) noexcept;

Digest digest(HashAlgorithm algorithm, std::span<const std::uint8_t> data);

//! Digest of the canonical hash preimage of (header fields, transactions).
//! The header's own hash, cycle_index and index_in_cycle do not participate.
Digest hash_block(const BlockHeader& header, std::span<const Transaction> transactions,
                  HashAlgorithm algorithm = HashAlgorithm::kSha256);

inline Digest hash_block(const Block& block, HashAlgorithm algorithm = HashAlgorithm::kSha256) {
    return hash_block(block.header, block.transactions, algorithm);
}

std::string to_hex(std::span<const std::uint8_t> bytes);
std::optional<Digest> digest_from_hex(std::string_view hex);

}  // namespace rollchain::chain
