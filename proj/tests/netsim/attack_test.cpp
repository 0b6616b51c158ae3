// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <gtest/gtest.h>

#include <rollchain/netsim/attack.hpp>
#include <rollchain/netsim/errors.hpp>

namespace rollchain::netsim {
namespace {

AttackSweepConfig base_config() {
    AttackSweepConfig c;
    c.deployment.line_node_count = 12;
    c.deployment.spacing = 10.0;
    c.deployment.radius = 12.0;
    c.deployment.area = default_area(c.deployment);
    c.densities = {0.002, 0.02};
    c.fractions = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
    c.trials = 150;
    c.seed = 99;
    return c;
}

TEST(AttackSweep, EndpointFractions) {
    const auto report = attack_sweep(base_config());
    ASSERT_EQ(report.cells.size(), 12u);
    for (const auto& c : report.cells) {
        EXPECT_EQ(c.trials, 150u);
        if (c.fraction == 0.0) {
            EXPECT_EQ(c.p_hat, 1.0);
            EXPECT_DOUBLE_EQ(c.mean_stretch, 1.0);
        }
        if (c.fraction == 1.0) {
            EXPECT_EQ(c.p_hat, 0.0);
            EXPECT_TRUE(std::isnan(c.mean_spl));
        }
        EXPECT_GE(c.p_hat, 0.0);
        EXPECT_LE(c.p_hat, 1.0);
    }
}

TEST(AttackSweep, CoupledRemovalIsMonotone) {
    const auto report = attack_sweep(base_config());
    for (std::size_t i = 1; i < report.cells.size(); ++i) {
        const auto& a = report.cells[i - 1];
        const auto& b = report.cells[i];
        if (a.density != b.density) continue;
        EXPECT_LE(b.successes, a.successes) << "density " << b.density << " f " << b.fraction;
    }
}

TEST(AttackSweep, StretchAtLeastOne) {
    auto config = base_config();
    config.fractions = {0.0, 0.1, 0.2, 0.3, 0.4};
    for (const auto& c : attack_sweep(config).cells) {
        if (!std::isnan(c.mean_stretch)) EXPECT_GE(c.mean_stretch, 1.0);
    }
}

TEST(AttackSweep, UncoupledIsNonincreasingWithinNoise) {
    auto config = base_config();
    config.coupled = false;
    config.trials = 400;
    const auto report = attack_sweep(config);
    for (std::size_t i = 1; i < report.cells.size(); ++i) {
        const auto& a = report.cells[i - 1];
        const auto& b = report.cells[i];
        if (a.density != b.density) continue;
        EXPECT_LE(b.p_hat, a.p_hat + 3 * std::hypot(a.std_error, b.std_error) + 1e-12);
    }
}

TEST(AttackSweep, Deterministic) {
    auto a = base_config();
    auto b = base_config();
    b.threads = 3;
    const auto ra = attack_sweep(a);
    const auto rb = attack_sweep(b);
    ASSERT_EQ(ra.cells.size(), rb.cells.size());
    for (std::size_t i = 0; i < ra.cells.size(); ++i) {
        EXPECT_EQ(ra.cells[i].successes, rb.cells[i].successes);
        EXPECT_EQ(ra.cells[i].seed, rb.cells[i].seed);
        if (!std::isnan(ra.cells[i].mean_spl)) EXPECT_EQ(ra.cells[i].mean_spl, rb.cells[i].mean_spl);
    }
}

TEST(AttackSweep, BreakdownFraction) {
    AttackSweepReport r;
    r.cells = {{0.1, 0.0, 0, 10, 10, 1.0, 0, 0, 0, 0}, {0.1, 0.3, 0, 10, 6, 0.6, 0, 0, 0, 0},
               {0.1, 0.5, 0, 10, 4, 0.4, 0, 0, 0, 0}, {0.1, 0.7, 0, 10, 1, 0.1, 0, 0, 0, 0}};
    EXPECT_EQ(r.breakdown_fraction(0.1), 0.5);
    EXPECT_EQ(r.breakdown_fraction(0.2), std::nullopt);
}

TEST(AttackSweep, RejectsBadFractions) {
    auto config = base_config();
    config.fractions = {0.5, 0.2};
    EXPECT_THROW((void)attack_sweep(config), NetsimError);
    config.fractions = {0.0, 1.5};
    EXPECT_THROW((void)attack_sweep(config), NetsimError);
}

}  // namespace
}  // namespace rollchain::netsim
