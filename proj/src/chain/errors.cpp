// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <rollchain/chain/errors.hpp>
#include <rollchain/chain/types.hpp>

namespace rollchain::chain {

std::string_view to_string(ChainErrc code) noexcept {
    switch (code) {
        case ChainErrc::kBadLinkage:
            return "BadLinkage";
        case ChainErrc::kBadIndex:
            return "BadIndex";
        case ChainErrc::kBadHash:
            return "BadHash";
        case ChainErrc::kCycleIncomplete:
            return "CycleIncomplete";
        case ChainErrc::kNotAtCapacity:
            return "NotAtCapacity";
        case ChainErrc::kWindowFull:
            return "WindowFull";
        case ChainErrc::kEmptyChain:
            return "EmptyChain";
        case ChainErrc::kOverlapViolation:
            return "OverlapViolation";
        case ChainErrc::kLinkageViolation:
            return "LinkageViolation";
        case ChainErrc::kInvalidTransaction:
            return "InvalidTransaction";
        case ChainErrc::kDecode:
            return "DecodeError";
        case ChainErrc::kIo:
            return "IoError";
    }
    return "Unknown";
}

void check_transaction(const Transaction& tx) {
    if (tx.readings.empty()) {
        throw ChainError{ChainErrc::kInvalidTransaction, "transaction has no readings"};
    }
    if (tx.readings.size() > 1 && tx.step == 0) {
        throw ChainError{ChainErrc::kInvalidTransaction, "multi-segment transaction needs step > 0"};
    }
}

}  // namespace rollchain::chain
