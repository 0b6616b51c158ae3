// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <rollchain/netsim/exact.hpp>

#include <array>
#include <bit>
#include <string>

#include <rollchain/netsim/errors.hpp>
#include <rollchain/netsim/graph.hpp>

namespace rollchain::netsim {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

ExactProbability brute_force_path_probability(std::size_t n, std::uint64_t edge_count) {
    if (n > kMaxEnumerableNodes) {
        throw NetsimError{NetsimErrc::kTooLargeToEnumerate,
                          "n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxEnumerableNodes)};
    }
    if (n == 0) throw NetsimError{NetsimErrc::kConfigError, "graph needs at least one node"};
    const auto lmax = max_edges(n);
    if (edge_count > lmax) {
        throw NetsimError{NetsimErrc::kLTooLarge,
                          "L = " + std::to_string(edge_count) + " exceeds Lmax = " + std::to_string(lmax)};
    }

    std::array<Edge, max_edges(kMaxEnumerableNodes)> pairs{};
    for (std::uint64_t k = 0; k < lmax; ++k) pairs[k] = edge_from_index(k, n);

    const std::uint32_t target = 1u << (n - 1);
    auto reaches_b = [&](std::uint32_t mask) {
        std::array<std::uint32_t, kMaxEnumerableNodes> nbr{};
        for (std::uint64_t k = 0; k < lmax; ++k) {
            if (mask >> k & 1u) {
                nbr[pairs[k].u] |= 1u << pairs[k].v;
                nbr[pairs[k].v] |= 1u << pairs[k].u;
            }
        }
        std::uint32_t seen = 1u;
        for (std::uint32_t frontier = 1u; frontier != 0;) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= nbr[std::countr_zero(f)];
            frontier = next & ~seen;
            seen |= next;
        }
        return (seen & target) != 0;
    };

    ExactProbability result;
    const std::uint64_t limit = std::uint64_t{1} << lmax;
    if (edge_count == 0) {
        result.total = 1;
        result.connected = reaches_b(0) ? 1 : 0;
        return result;
    }
    // Gosper's hack walks every mask with exactly L bits set.
    for (std::uint64_t mask = (std::uint64_t{1} << edge_count) - 1; mask < limit;) {
        ++result.total;
        if (reaches_b(static_cast<std::uint32_t>(mask))) ++result.connected;
        const std::uint64_t low = mask & (~mask + 1);
        const std::uint64_t ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    return result;
}

}  // namespace rollchain::netsim
