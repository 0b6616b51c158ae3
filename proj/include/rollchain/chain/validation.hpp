// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <rollchain/chain/full_chain.hpp>
#include <rollchain/chain/local_chain.hpp>

namespace rollchain::chain {

enum class ViolationKind {
    kBadHash,
    kBadLinkage,
    kBadIndex,
    kBadGenesis,
    kBadBookkeeping,
    kWindowOverflow,
    kOverlap,
    kInvalidTransaction,
};

std::string_view to_string(ViolationKind kind) noexcept;

struct Violation {
    std::uint64_t global_index{0};
    ViolationKind kind{ViolationKind::kBadHash};
    std::string detail;
};

//! Empty report means the chain is valid.
using ValidationReport = std::vector<Violation>;

ValidationReport validate_chain(const LocalChain& chain);
ValidationReport validate_chain(const FullChain& chain);

}  // namespace rollchain::chain
