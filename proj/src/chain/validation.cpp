// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <rollchain/chain/validation.hpp>

#include <rollchain/chain/errors.hpp>

namespace rollchain::chain {

std::string_view to_string(ViolationKind kind) noexcept {
    switch (kind) {
        case ViolationKind::kBadHash:
            return "BadHash";
        case ViolationKind::kBadLinkage:
            return "BadLinkage";
        case ViolationKind::kBadIndex:
            return "BadIndex";
        case ViolationKind::kBadGenesis:
            return "BadGenesis";
        case ViolationKind::kBadBookkeeping:
            return "BadBookkeeping";
        case ViolationKind::kWindowOverflow:
            return "WindowOverflow";
        case ViolationKind::kOverlap:
            return "Overlap";
        case ViolationKind::kInvalidTransaction:
            return "InvalidTransaction";
    }
    return "Unknown";
}

namespace {

    void check_contents(const Block& block, HashAlgorithm algorithm, bool first, ValidationReport& report) {
        const auto& h = block.header;
        if (hash_block(block, algorithm) != h.hash) {
            report.push_back({h.global_index, ViolationKind::kBadHash, "stored hash does not recompute"});
        }
        for (const auto& tx : block.transactions) {
            try {
                check_transaction(tx);
            } catch (const ChainError& e) {
                report.push_back({h.global_index, ViolationKind::kInvalidTransaction, e.what()});
            }
        }
        if (h.global_index == 0) {
            if (!first) {
                report.push_back({0, ViolationKind::kBadGenesis, "genesis is not the first block"});
            }
            if (h.prev_hash != kZeroDigest || !block.transactions.empty()) {
                report.push_back({0, ViolationKind::kBadGenesis, "genesis must be empty with a zero prev_hash"});
            }
        }
    }

    void check_link(const Block& prev, const Block& next, ValidationReport& report) {
        const auto g = next.header.global_index;
        if (next.header.prev_hash != prev.header.hash) {
            report.push_back({g, ViolationKind::kBadLinkage, "prev_hash does not match predecessor"});
        }
        if (g != prev.header.global_index + 1) {
            report.push_back({g, ViolationKind::kBadIndex,
                              "follows index " + std::to_string(prev.header.global_index)});
        }
    }

}  // namespace

ValidationReport validate_chain(const LocalChain& chain) {
    ValidationReport report;
    if (chain.size() > chain.capacity + 1) {
        report.push_back({chain.blocks.back().header.global_index, ViolationKind::kWindowOverflow,
                          std::to_string(chain.size()) + " blocks exceed capacity + 1"});
    }
    for (std::size_t i = 0; i < chain.blocks.size(); ++i) {
        const auto& block = chain.blocks[i];
        check_contents(block, chain.algorithm, i == 0, report);
        if (block.header.index_in_cycle > chain.capacity) {
            report.push_back({block.header.global_index, ViolationKind::kBadBookkeeping,
                              "index_in_cycle exceeds capacity"});
        }
        if (i == 0) continue;

        const auto& prev = chain.blocks[i - 1];
        check_link(prev, block, report);

        const auto& a = prev.header;
        const auto& b = block.header;
        const bool same_cycle = b.cycle_index == a.cycle_index && b.index_in_cycle == a.index_in_cycle + 1;
        const bool next_cycle =
            a.index_in_cycle == chain.capacity && b.cycle_index == a.cycle_index + 1 && b.index_in_cycle == 1;
        if (!same_cycle && !next_cycle) {
            report.push_back({b.global_index, ViolationKind::kBadBookkeeping,
                              "cycle position does not continue predecessor"});
        }
    }
    return report;
}

ValidationReport validate_chain(const FullChain& chain) {
    ValidationReport report;
    if (chain.cycles.empty() || chain.cycles.front().empty() ||
        chain.cycles.front().front().header.hash != chain.genesis.header.hash) {
        report.push_back({chain.genesis.header.global_index, ViolationKind::kBadGenesis,
                          "first cycle does not start at the genesis block"});
    }
    for (std::size_t i = 0; i < chain.cycles.size(); ++i) {
        const auto& record = chain.cycles[i];
        for (std::size_t j = 0; j < record.size(); ++j) {
            check_contents(record[j], chain.algorithm, i == 0 && j == 0, report);
            if (j > 0) check_link(record[j - 1], record[j], report);
        }
        if (i > 0 && !record.empty() && !chain.cycles[i - 1].empty()) {
            const auto& closing = chain.cycles[i - 1].back().header;
            const auto& opening = record.front().header;
            if (closing.hash != opening.hash || closing.global_index != opening.global_index) {
                report.push_back({opening.global_index, ViolationKind::kOverlap,
                                  "cycle " + std::to_string(i) + " does not open with the previous cycle's last block"});
            }
        }
    }
    return report;
}

}  // namespace rollchain::chain
