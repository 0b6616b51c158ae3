// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <rollchain/chain/full_chain.hpp>
#include <rollchain/chain/validation.hpp>
#include <rollchain/consensus/engine.hpp>
#include <rollchain/harness/config.hpp>
#include <rollchain/harness/report.hpp>

namespace rollchain::harness {

inline constexpr std::string_view kToolName = "rollchain";
std::string_view tool_version() noexcept;

struct RunManifest {
    std::string config_hash;
    std::string tool_version;
    std::uint64_t seed{0};
    nlohmann::ordered_json parameters;
    std::vector<std::string> outputs;
    std::string started_at;  // UTC, ISO 8601
};

nlohmann::ordered_json to_json(const RunManifest& manifest);

//! Everything an experiment produces before it is written out.
struct ExperimentResult {
    std::vector<Table> tables;
    std::vector<consensus::Event> events;  // protocol runs only
    std::vector<chain::Block> chain;       // written as a chain file when non-empty
};

ExperimentResult run_chain_replay(const ExperimentConfig& config);
ExperimentResult run_connectivity(const ExperimentConfig& config);
ExperimentResult run_attack_sweep(const ExperimentConfig& config);
ExperimentResult run_protocol_experiment(const ExperimentConfig& config);
ExperimentResult run_kind(const ExperimentConfig& config);

//! Runs the experiment and writes the manifest first, then every report.
//! File names carry the first 12 hex digits of the config hash.
RunManifest run_experiment(const ExperimentConfig& config);

//! Reference line at fraction * Lmax for each n.
Table marker_table(const std::vector<std::size_t>& n, double fraction);

}  // namespace rollchain::harness
