// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <rollchain/chain/full_chain.hpp>

#include <string>

#include <rollchain/chain/errors.hpp>
#include <rollchain/chain/local_chain.hpp>

namespace rollchain::chain {

std::vector<Block> FullChain::blocks() const {
    std::vector<Block> out;
    out.push_back(genesis);
    for (const auto& record : cycles) {
        for (std::size_t j = 1; j < record.size(); ++j) out.push_back(record[j]);
    }
    return out;
}

std::vector<std::vector<Block>> FullChain::matrix() const {
    std::vector<std::vector<Block>> rows;
    rows.reserve(cycles.size());
    for (const auto& record : cycles) {
        if (record.empty()) continue;
        rows.emplace_back(record.begin() + 1, record.end());
    }
    return rows;
}

FullChain assemble_full_chain(std::vector<CycleRecord> cycle_records, HashAlgorithm algorithm) {
    if (cycle_records.empty()) throw ChainError{ChainErrc::kLinkageViolation, "no cycle records"};

    for (std::size_t i = 0; i < cycle_records.size(); ++i) {
        const auto& record = cycle_records[i];
        if (record.empty()) {
            throw ChainError{ChainErrc::kLinkageViolation, "cycle record " + std::to_string(i) + " is empty"};
        }
        if (hash_block(record.front(), algorithm) != record.front().header.hash) {
            throw ChainError{ChainErrc::kLinkageViolation,
                             "cycle " + std::to_string(i) + ": first block hash does not recompute"};
        }
        for (std::size_t j = 1; j < record.size(); ++j) {
            try {
                check_successor(record[j - 1], record[j], algorithm);
            } catch (const ChainError& e) {
                throw ChainError{ChainErrc::kLinkageViolation, "cycle " + std::to_string(i) + ": " + e.what()};
            }
        }
        if (i > 0) {
            const auto& closing = cycle_records[i - 1].back().header;
            const auto& opening = record.front().header;
            if (closing.hash != opening.hash || closing.global_index != opening.global_index) {
                throw ChainError{ChainErrc::kOverlapViolation,
                                 "last block of cycle " + std::to_string(i - 1) + " (index " +
                                     std::to_string(closing.global_index) + ") differs from first block of cycle " +
                                     std::to_string(i) + " (index " + std::to_string(opening.global_index) + ")"};
            }
        }
    }

    FullChain full;
    full.genesis = cycle_records.front().front();
    full.cycles = std::move(cycle_records);
    full.algorithm = algorithm;
    return full;
}

std::vector<CycleRecord> split_into_cycles(std::span<const Block> history, std::size_t capacity) {
    std::vector<CycleRecord> records;
    if (history.empty() || capacity == 0) return records;

    const auto base_cycle = history.front().header.cycle_index;
    for (std::size_t start = 0, cycle = 0; start == 0 || start < history.size() - 1; start += capacity, ++cycle) {
        const auto end = std::min(start + capacity + 1, history.size());
        CycleRecord record{history.begin() + static_cast<std::ptrdiff_t>(start),
                           history.begin() + static_cast<std::ptrdiff_t>(end)};
        for (std::size_t j = 0; j < record.size(); ++j) {
            if (cycle == 0 && j == 0) continue;
            record[j].header.cycle_index = base_cycle + cycle;
            record[j].header.index_in_cycle = j;
        }
        records.push_back(std::move(record));
    }
    return records;
}

}  // namespace rollchain::chain
