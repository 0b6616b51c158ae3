// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <rollchain/netsim/generators.hpp>

namespace rollchain::netsim {

struct AttackSweepConfig {
    DeploymentParams deployment;
    std::vector<double> densities;  // extra sensors per square meter
    std::vector<double> fractions;  // ascending, in [0, 1]
    std::size_t trials{1};
    //! Nested removals from one edge order per trial; path existence is then
    //! exactly nonincreasing in the fraction.
    bool coupled{true};
    std::uint64_t seed{0};
    unsigned threads{1};
};

struct AttackCell {
    double density{0.0};
    double fraction{0.0};
    std::size_t node_count{0};
    std::size_t trials{0};
    std::size_t successes{0};
    double p_hat{0.0};
    double std_error{0.0};
    double mean_spl{0.0};      // NaN when no trial kept a path
    double mean_stretch{0.0};  // spl / baseline spl, NaN when undefined
    std::uint64_t seed{0};     // stream of this density's trials
};

struct AttackSweepReport {
    std::vector<AttackCell> cells;  // density-major, fractions ascending

    //! Smallest swept fraction whose path probability falls below 0.5.
    [[nodiscard]] std::optional<double> breakdown_fraction(double density) const;
};

AttackSweepReport attack_sweep(const AttackSweepConfig& config);

}  // namespace rollchain::netsim
