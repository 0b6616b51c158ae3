// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <rollchain/harness/errors.hpp>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace rollchain::harness {

std::string_view to_string(HarnessErrc code) noexcept {
    switch (code) {
        case HarnessErrc::kParseError:
            return "ParseError";
        case HarnessErrc::kValidationError:
            return "ValidationError";
        case HarnessErrc::kIoError:
            return "IoError";
    }
    return "Unknown";
}

HarnessError::HarnessError(HarnessErrc code, std::vector<std::string> problems)
    : std::runtime_error(fmt::format("{}: {}", to_string(code), fmt::join(problems, "; "))),
      code_(code),
      problems_(std::move(problems)) {}

}  // namespace rollchain::harness
