// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <rollchain/consensus/event_log.hpp>

#include <nlohmann/json.hpp>

namespace rollchain::consensus {

std::string to_ndjson(const Event& event) {
    nlohmann::ordered_json j;
    j["iteration"] = event.iteration;
    j["actor"] = event.actor;
    j["action"] = event.action;
    j["outcome"] = event.outcome;
    j["bytes"] = event.bytes;
    if (event.peer) j["peer"] = *event.peer;
    if (event.index) j["index"] = *event.index;
    return j.dump();
}

void write_event_log(std::ostream& out, const std::vector<Event>& events) {
    for (const auto& e : events) out << to_ndjson(e) << '\n';
}

}  // namespace rollchain::consensus
