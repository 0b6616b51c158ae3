// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rollchain::netsim {

enum class NetsimErrc {
    kLTooLarge,
    kDegenerateArea,
    kConfigError,
    kTooLargeToEnumerate,
};

std::string_view to_string(NetsimErrc code) noexcept;

class NetsimError : public std::runtime_error {
  public:
    NetsimError(NetsimErrc code, const std::string& what)
        : std::runtime_error{std::string{to_string(code)} + ": " + what}, code_{code} {}

    [[nodiscard]] NetsimErrc code() const noexcept { return code_; }

  private:
    NetsimErrc code_;
};

}  // namespace rollchain::netsim
