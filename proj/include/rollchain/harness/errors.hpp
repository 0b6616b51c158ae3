// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rollchain::harness {

enum class HarnessErrc {
    kParseError,
    kValidationError,
    kIoError,
};

std::string_view to_string(HarnessErrc code) noexcept;

//! Carries every problem found, not just the first one.
class HarnessError : public std::runtime_error {
  public:
    HarnessError(HarnessErrc code, std::vector<std::string> problems);

    [[nodiscard]] HarnessErrc code() const noexcept { return code_; }
    [[nodiscard]] const std::vector<std::string>& problems() const noexcept { return problems_; }

  private:
    HarnessErrc code_;
    std::vector<std::string> problems_;
};

}  // namespace rollchain::harness
