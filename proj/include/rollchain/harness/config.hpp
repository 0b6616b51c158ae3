// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include <rollchain/chain/hashing.hpp>
#include <rollchain/chain/local_chain.hpp>
#include <rollchain/consensus/engine.hpp>
#include <rollchain/netsim/generators.hpp>

namespace rollchain::harness {

enum class ExperimentKind {
    kChainReplay,
    kConnectivity,
    kAttackSweep,
    kProtocol,
};

std::string_view to_string(ExperimentKind kind) noexcept;
//! Accepts the CLI subcommand names and the long forms
//! ("connectivity-sweep", "protocol-on-topology").
std::optional<ExperimentKind> parse_kind(std::string_view name) noexcept;

enum class OutputFormat { kCsv, kJson };

std::string_view to_string(OutputFormat format) noexcept;
std::optional<OutputFormat> parse_format(std::string_view name) noexcept;

struct ChainReplayParams {
    std::size_t capacity{6};
    std::size_t blocks{18};  // blocks appended after genesis
    chain::PruningMode pruning{chain::PruningMode::kReset};
    chain::HashAlgorithm algorithm{chain::HashAlgorithm::kSha256};
    chain::Timestamp genesis_time{0};
    chain::Timestamp tick_ms{1000};
};

struct ConnectivityParams {
    std::vector<std::size_t> n;
    std::vector<std::uint64_t> edges;  // empty: every L in 1..Lmax for each n
    std::size_t trials{10000};
    netsim::GraphModel model{netsim::GraphModel::kExactEdges};
    double marker_fraction{0.7};
};

struct AttackParams {
    netsim::DeploymentParams deployment;
    std::vector<double> densities;
    std::vector<double> fractions;
    std::size_t trials{200};
    bool coupled{true};
};

enum class TopologyKind { kComplete, kRing, kPath, kRandom, kSegmented };

std::string_view to_string(TopologyKind kind) noexcept;

struct TopologyParams {
    TopologyKind kind{TopologyKind::kComplete};
    std::uint64_t edges{0};  // random
    std::size_t hubs{0};     // segmented
    std::size_t mobiles_per_segment{0};
    std::size_t overlap{0};
};

struct FailureSpec {
    chain::NodeId node{0};
    consensus::NodeStatus status{consensus::NodeStatus::kFailed};
    std::vector<std::uint64_t> iterations;
};

struct ProtocolParams {
    std::size_t nodes{6};
    TopologyParams topology;
    consensus::DisseminationVariant variant{consensus::DisseminationVariant::kSingleBlock};
    chain::PruningMode pruning{chain::PruningMode::kReset};
    std::size_t capacity{0};
    std::size_t cycles{1};
    chain::HashAlgorithm algorithm{chain::HashAlgorithm::kSha256};
    chain::Timestamp genesis_time{0};
    chain::Timestamp tick_ms{1000};
    std::vector<FailureSpec> failures;
    std::vector<consensus::Injection> injections;
};

struct ExperimentConfig {
    ExperimentKind kind{ExperimentKind::kConnectivity};
    std::uint64_t seed{0};
    unsigned threads{1};
    std::filesystem::path output{"out"};
    OutputFormat format{OutputFormat::kCsv};

    ChainReplayParams chain;
    ConnectivityParams connectivity;
    AttackParams attack;
    ProtocolParams protocol;
};

//! Command-line values; each one that is set wins over the file.
struct Overrides {
    std::optional<ExperimentKind> kind;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
    std::optional<std::filesystem::path> output;
    std::optional<OutputFormat> format;
};

//! Throws HarnessError: kParseError for malformed YAML (with the line), or
//! kValidationError listing every violation.
ExperimentConfig parse_config(std::string_view text, const Overrides& overrides = {});
ExperimentConfig load_config(const std::filesystem::path& path, const Overrides& overrides = {});

//! The parameters that determine results: kind, seed and the section for the
//! kind. Thread count, output directory and format are left out.
nlohmann::ordered_json effective_config(const ExperimentConfig& config);

//! SHA-256 of the compact effective config, hex encoded.
std::string config_hash(const ExperimentConfig& config);

}  // namespace rollchain::harness
