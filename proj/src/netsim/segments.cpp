// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <rollchain/netsim/segments.hpp>

#include <algorithm>
#include <numeric>

#include <rollchain/netsim/errors.hpp>

namespace rollchain::netsim {

std::vector<std::size_t> SegmentedTopology::shared(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> out;
    std::ranges::set_intersection(segment_members.at(a), segment_members.at(b), std::back_inserter(out));
    return out;
}

Graph SegmentedTopology::to_graph() const {
    Graph g{hub_count + mobile_count};
    g.kinds.assign(hub_count, NodeKind::kFixed);
    g.kinds.resize(hub_count + mobile_count, NodeKind::kMobile);
    for (std::size_t h = 0; h < hub_count; ++h) {
        std::vector<Vertex> members{static_cast<Vertex>(h)};
        for (auto m : segment_members[h]) members.push_back(static_cast<Vertex>(hub_count + m));
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) g.add_edge(members[i], members[j]);
        }
    }
    return g;
}

SegmentedTopology gen_segmented_topology(std::size_t hub_count, std::size_t mobiles_per_segment,
                                         std::size_t overlap_count, Engine& rng) {
    if (hub_count == 0) throw NetsimError{NetsimErrc::kConfigError, "at least one hub is required"};
    const auto overlap = hub_count == 1 ? std::size_t{0} : overlap_count;
    if (overlap > mobiles_per_segment) {
        throw NetsimError{NetsimErrc::kConfigError, "overlap exceeds the segment size"};
    }
    if (hub_count >= 3 && 2 * overlap > mobiles_per_segment) {
        throw NetsimError{NetsimErrc::kConfigError,
                          "a middle segment cannot share more than half its mobiles with each neighbor"};
    }

    const auto stride = mobiles_per_segment - overlap;
    SegmentedTopology topo;
    topo.hub_count = hub_count;
    topo.mobile_count = hub_count * mobiles_per_segment - (hub_count - 1) * overlap;

    // Slot s belongs to segment i when i*stride <= s < i*stride + size; a random
    // permutation decides which mobile fills each slot.
    std::vector<std::size_t> slot_to_mobile(topo.mobile_count);
    std::iota(slot_to_mobile.begin(), slot_to_mobile.end(), std::size_t{0});
    for (std::size_t i = 0; i + 1 < slot_to_mobile.size(); ++i) {
        std::uniform_int_distribution<std::size_t> pick{i, slot_to_mobile.size() - 1};
        std::swap(slot_to_mobile[i], slot_to_mobile[pick(rng)]);
    }

    topo.segment_members.resize(hub_count);
    topo.memberships.resize(topo.mobile_count);
    for (std::size_t h = 0; h < hub_count; ++h) {
        for (std::size_t s = h * stride; s < h * stride + mobiles_per_segment; ++s) {
            const auto m = slot_to_mobile[s];
            topo.segment_members[h].push_back(m);
            topo.memberships[m].push_back(h);
        }
        std::ranges::sort(topo.segment_members[h]);
    }
    for (std::size_t m = 0; m < topo.mobile_count; ++m) {
        if (topo.memberships[m].size() >= 2) topo.boundary.push_back(m);
    }
    return topo;
}

}  // namespace rollchain::netsim
