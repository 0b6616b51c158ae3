// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>

namespace rollchain::netsim {

inline constexpr std::size_t kMaxEnumerableNodes = 7;

struct ExactProbability {
    std::uint64_t connected{0};  // L-edge graphs in which 0 and n-1 are connected
    std::uint64_t total{0};      // C(Lmax, L)

    [[nodiscard]] double value() const noexcept {
        return total == 0 ? 0.0 : static_cast<double>(connected) / static_cast<double>(total);
    }
};

//! Enumerates every L-edge graph on n <= 7 vertices.
ExactProbability brute_force_path_probability(std::size_t n, std::uint64_t edge_count);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

}  // namespace rollchain::netsim
