// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include <rollchain/netsim/graph.hpp>
#include <rollchain/netsim/rng.hpp>

namespace rollchain::netsim {

//! Hubs are stationary segment centres, mobiles move between segments. Hubs are
//! vertices 0..hub_count-1 of to_graph(), mobiles follow.
struct SegmentedTopology {
    std::size_t hub_count{0};
    std::size_t mobile_count{0};
    std::vector<std::vector<std::size_t>> segment_members;  // per hub, mobile indices ascending
    std::vector<std::vector<std::size_t>> memberships;      // per mobile, hub indices ascending
    std::vector<std::size_t> boundary;                      // mobiles in two or more segments

    //! Mobiles shared by segments a and b.
    [[nodiscard]] std::vector<std::size_t> shared(std::size_t a, std::size_t b) const;

    //! Each segment is a complete graph on its hub and its mobiles.
    [[nodiscard]] Graph to_graph() const;
};

//! Hubs in a row; every segment holds exactly `mobiles_per_segment` mobiles and
//! adjacent segments share `overlap_count` of them. Which mobile lands in which
//! slot is drawn from `rng`, so calling again re-samples membership.
SegmentedTopology gen_segmented_topology(std::size_t hub_count, std::size_t mobiles_per_segment,
                                         std::size_t overlap_count, Engine& rng);

}  // namespace rollchain::netsim
