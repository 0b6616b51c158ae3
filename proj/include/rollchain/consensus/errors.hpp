// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rollchain::consensus {

enum class ConsensusErrc {
    kDuplicateId,
    kNoNeighbors,
    kConfigError,
};

std::string_view to_string(ConsensusErrc code) noexcept;

class ConsensusError : public std::runtime_error {
  public:
    ConsensusError(ConsensusErrc code, const std::string& what)
        : std::runtime_error{std::string{to_string(code)} + ": " + what}, code_{code} {}

    [[nodiscard]] ConsensusErrc code() const noexcept { return code_; }

  private:
    ConsensusErrc code_;
};

}  // namespace rollchain::consensus
