// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <rollchain/chain/local_chain.hpp>

#include <stdexcept>
#include <string>

#include <rollchain/chain/errors.hpp>

namespace rollchain::chain {

const Block& LocalChain::tip() const {
    if (blocks.empty()) throw ChainError{ChainErrc::kEmptyChain, "chain has no blocks"};
    return blocks.back();
}

const Block* LocalChain::find(std::uint64_t global_index) const noexcept {
    if (blocks.empty()) return nullptr;
    const auto first = blocks.front().header.global_index;
    if (global_index < first || global_index - first >= blocks.size()) return nullptr;
    const auto& candidate = blocks[global_index - first];
    return candidate.header.global_index == global_index ? &candidate : nullptr;
}

std::string_view to_string(PruningMode mode) noexcept {
    return mode == PruningMode::kReset ? "reset" : "sliding";
}

std::optional<PruningMode> parse_pruning_mode(std::string_view name) noexcept {
    if (name == "reset") return PruningMode::kReset;
    if (name == "sliding") return PruningMode::kSliding;
    return std::nullopt;
}

void seal(Block& block, HashAlgorithm algorithm) {
    block.header.hash = hash_block(block.header, block.transactions, algorithm);
}

Block make_genesis(Timestamp created_at, HashAlgorithm algorithm) {
    Block genesis;
    genesis.header.created_at = created_at;
    seal(genesis, algorithm);
    return genesis;
}

LocalChain make_chain(Block genesis, std::size_t capacity, HashAlgorithm algorithm) {
    if (capacity == 0) throw std::invalid_argument{"chain capacity must be at least 1"};
    LocalChain chain;
    chain.capacity = capacity;
    chain.algorithm = algorithm;
    chain.blocks.push_back(std::move(genesis));
    return chain;
}

Block make_block(const Block& tip, NodeId creator, Timestamp created_at,
                 std::vector<Transaction> transactions, std::size_t capacity, HashAlgorithm algorithm) {
    for (const auto& tx : transactions) check_transaction(tx);

    Block block;
    auto& h = block.header;
    h.global_index = tip.header.global_index + 1;
    if (tip.header.index_in_cycle < capacity) {
        h.cycle_index = tip.header.cycle_index;
        h.index_in_cycle = tip.header.index_in_cycle + 1;
    } else {
        h.cycle_index = tip.header.cycle_index + 1;
        h.index_in_cycle = 1;
    }
    h.creator_id = creator;
    h.created_at = created_at;
    h.prev_hash = tip.header.hash;
    block.transactions = std::move(transactions);
    seal(block, algorithm);
    return block;
}

void check_successor(const Block& tip, const Block& next, HashAlgorithm algorithm) {
    if (next.header.prev_hash != tip.header.hash) {
        throw ChainError{ChainErrc::kBadLinkage,
                         "block " + std::to_string(next.header.global_index) + " does not link to tip " +
                             std::to_string(tip.header.global_index)};
    }
    if (next.header.global_index != tip.header.global_index + 1) {
        throw ChainError{ChainErrc::kBadIndex, "expected global index " +
                                                   std::to_string(tip.header.global_index + 1) + ", got " +
                                                   std::to_string(next.header.global_index)};
    }
    if (hash_block(next, algorithm) != next.header.hash) {
        throw ChainError{ChainErrc::kBadHash,
                         "hash of block " + std::to_string(next.header.global_index) + " does not recompute"};
    }
    for (const auto& tx : next.transactions) check_transaction(tx);
}

LocalChain append_block(LocalChain chain, const Block& block) {
    const auto& tip = chain.tip();
    if (chain.size() > chain.capacity) {
        throw ChainError{ChainErrc::kWindowFull, "window holds capacity + 1 blocks; prune first"};
    }
    check_successor(tip, block, chain.algorithm);
    chain.blocks.push_back(block);
    return chain;
}

ResetResult prune_reset(LocalChain chain) {
    if (chain.size() != chain.capacity + 1) {
        throw ChainError{ChainErrc::kCycleIncomplete, "cycle holds " + std::to_string(chain.size()) +
                                                          " of " + std::to_string(chain.capacity + 1) +
                                                          " blocks"};
    }
    Block carry = std::move(chain.blocks.back());
    chain.blocks.pop_back();
    carry.header.cycle_index += 1;
    carry.header.index_in_cycle = 0;

    ResetResult result{std::move(chain), {}};
    result.deleted = std::move(result.chain.blocks);
    result.chain.blocks.clear();
    result.chain.blocks.push_back(std::move(carry));
    return result;
}

SlideResult prune_sliding(LocalChain chain, const Block& new_block) {
    const auto& tip = chain.tip();
    if (chain.size() < chain.capacity) {
        throw ChainError{ChainErrc::kNotAtCapacity, "window holds " + std::to_string(chain.size()) + " of " +
                                                        std::to_string(chain.capacity) + " blocks"};
    }
    check_successor(tip, new_block, chain.algorithm);
    Block oldest = std::move(chain.blocks.front());
    chain.blocks.erase(chain.blocks.begin());
    chain.blocks.push_back(new_block);
    return {std::move(chain), std::move(oldest)};
}

RollResult roll_forward(LocalChain chain, const Block& block, PruningMode mode) {
    if (mode == PruningMode::kSliding) {
        if (chain.size() >= chain.capacity) {
            auto slid = prune_sliding(std::move(chain), block);
            return {std::move(slid.chain), {std::move(slid.deleted)}};
        }
        return {append_block(std::move(chain), block), {}};
    }

    const auto& tip = chain.tip();
    if (tip.header.index_in_cycle >= chain.capacity || chain.size() == chain.capacity + 1) {
        // Validate against the full window first so a bad block leaves nothing pruned.
        check_successor(tip, block, chain.algorithm);
        if (chain.size() == chain.capacity + 1) {
            auto reset = prune_reset(std::move(chain));
            return {append_block(std::move(reset.chain), block), std::move(reset.deleted)};
        }
        // A partial window (e.g. rebuilt from neighbors) still closes its cycle on the tip.
        RollResult result{std::move(chain), {}};
        auto& blocks = result.chain.blocks;
        Block carry = std::move(blocks.back());
        blocks.pop_back();
        carry.header.cycle_index += 1;
        carry.header.index_in_cycle = 0;
        result.deleted = std::move(blocks);
        blocks.clear();
        blocks.push_back(std::move(carry));
        result.chain = append_block(std::move(result.chain), block);
        return result;
    }
    return {append_block(std::move(chain), block), {}};
}

}  // namespace rollchain::chain
