// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rollchain::chain {

enum class ChainErrc {
    kBadLinkage,
    kBadIndex,
    kBadHash,
    kCycleIncomplete,
    kNotAtCapacity,
    kWindowFull,
    kEmptyChain,
    kOverlapViolation,
    kLinkageViolation,
    kInvalidTransaction,
    kDecode,
    kIo,
};

std::string_view to_string(ChainErrc code) noexcept;

class ChainError : public std::runtime_error {
  public:
    ChainError(ChainErrc code, const std::string& what)
        : std::runtime_error{std::string{to_string(code)} + ": " + what}, code_{code} {}

    [[nodiscard]] ChainErrc code() const noexcept { return code_; }

  private:
    ChainErrc code_;
};

}  // namespace rollchain::chain
