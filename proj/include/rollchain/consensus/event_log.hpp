// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <rollchain/chain/types.hpp>

namespace rollchain::consensus {

//! One line of the event log. `peer` and `index` are omitted when not meaningful.
struct Event {
    std::uint64_t iteration{0};
    chain::NodeId actor{0};
    std::string action;   // create, skip, send, receive, reply, recover, prune, inject
    std::string outcome;  // ok, accepted, rejected:<reason>, failed, ...
    std::uint64_t bytes{0};
    std::optional<chain::NodeId> peer;
    std::optional<std::uint64_t> index;

    friend bool operator==(const Event&, const Event&) = default;
};

//! Newline-delimited JSON, fields in the order
//! iteration, actor, action, outcome, bytes, peer, index.
void write_event_log(std::ostream& out, const std::vector<Event>& events);
std::string to_ndjson(const Event& event);

}  // namespace rollchain::consensus
