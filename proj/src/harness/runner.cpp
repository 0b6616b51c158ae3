// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <rollchain/harness/runner.hpp>

#include <chrono>
#include <fstream>
#include <map>

#include <fmt/chrono.h>
#include <fmt/format.h>

#include <rollchain/chain/errors.hpp>
#include <rollchain/chain/serialization.hpp>
#include <rollchain/harness/errors.hpp>
#include <rollchain/netsim/attack.hpp>
#include <rollchain/netsim/graph.hpp>
#include <rollchain/netsim/monte_carlo.hpp>
#include <rollchain/netsim/rng.hpp>
#include <rollchain/netsim/segments.hpp>

#ifndef ROLLCHAIN_VERSION
#define ROLLCHAIN_VERSION "0.0.0"
#endif

namespace rollchain::harness {

using chain::Block;
using netsim::derive_seed;
using netsim::make_engine;

std::string_view tool_version() noexcept {
    return ROLLCHAIN_VERSION;
}

namespace {

    // Independent random streams carved out of the master seed.
    constexpr std::uint64_t kTransactionStream = 1;
    constexpr std::uint64_t kTopologyStream = 2;

    std::uint64_t u64(std::size_t v) { return static_cast<std::uint64_t>(v); }

    Table violations_table(const std::vector<std::pair<std::string, chain::Violation>>& found) {
        Table t{"violations", {"source", "global_index", "kind", "detail"}, {}};
        for (const auto& [source, v] : found) {
            t.rows.push_back({source, v.global_index, std::string{chain::to_string(v.kind)}, v.detail});
        }
        return t;
    }

}  // namespace

Table marker_table(const std::vector<std::size_t>& n, double fraction) {
    Table t{"markers", {"n", "lmax", "fraction", "L"}, {}};
    for (auto k : n) {
        const auto lmax = netsim::max_edges(k);
        t.rows.push_back({u64(k), lmax, fraction, fraction * static_cast<double>(lmax)});
    }
    return t;
}

ExperimentResult run_chain_replay(const ExperimentConfig& config) {
    const auto& p = config.chain;
    auto rng = make_engine(derive_seed(config.seed, {kTransactionStream}));

    const auto genesis = chain::make_genesis(p.genesis_time, p.algorithm);
    std::vector<Block> history{genesis};
    auto window = chain::make_chain(genesis, p.capacity, p.algorithm);
    std::vector<chain::CycleRecord> records;

    Table steps{"steps",
                {"step", "global_index", "creator_id", "cycle_index", "index_in_cycle", "window_size",
                 "window_first", "window_last", "pruned"},
                {}};
    for (std::uint64_t step = 1; step <= p.blocks; ++step) {
        const auto creator = (step - 1) % p.capacity + 1;
        const auto now = p.genesis_time + step * p.tick_ms;
        auto block = chain::make_block(window.tip(), creator, now,
                                       consensus::synthetic_transactions(creator, now, rng), p.capacity,
                                       p.algorithm);
        history.push_back(block);
        auto rolled = chain::roll_forward(window, block, p.pruning);
        if (p.pruning == chain::PruningMode::kReset && !rolled.deleted.empty()) records.push_back(window.blocks);
        window = std::move(rolled.chain);
        steps.rows.push_back({step, block.header.global_index, creator, window.tip().header.cycle_index,
                              window.tip().header.index_in_cycle, u64(window.size()),
                              window.blocks.front().header.global_index, window.tip().header.global_index,
                              u64(rolled.deleted.size())});
    }

    std::vector<std::pair<std::string, chain::Violation>> found;
    for (auto& v : chain::validate_chain(window)) found.emplace_back("window", std::move(v));

    Table cycles{"cycles", {"cycle", "first_index", "last_index", "head_hash", "tail_hash"}, {}};
    ExperimentResult result;
    if (p.pruning == chain::PruningMode::kReset) {
        if (window.size() > 1) records.push_back(window.blocks);
        try {
            const auto full = chain::assemble_full_chain(records, p.algorithm);
            for (auto& v : chain::validate_chain(full)) found.emplace_back("full", std::move(v));
            for (std::size_t c = 0; c < full.cycles.size(); ++c) {
                const auto& rec = full.cycles[c];
                cycles.rows.push_back({u64(c + 1), rec.front().header.global_index, rec.back().header.global_index,
                                       chain::to_hex(rec.front().header.hash), chain::to_hex(rec.back().header.hash)});
            }
            result.chain = full.blocks();
        } catch (const chain::ChainError& e) {
            found.emplace_back("full", chain::Violation{0, chain::ViolationKind::kOverlap, e.what()});
            result.chain = history;
        }
    } else {
        // The window must be the newest slice of the unbounded history.
        const auto offset = history.size() - window.size();
        for (std::size_t i = 0; i < window.size(); ++i) {
            if (window.blocks[i].header.hash != history[offset + i].header.hash) {
                found.emplace_back("window", chain::Violation{window.blocks[i].header.global_index,
                                                              chain::ViolationKind::kBadLinkage,
                                                              "window differs from the reference history"});
            }
        }
        result.chain = history;
    }

    result.tables.push_back(std::move(steps));
    result.tables.push_back(std::move(cycles));
    result.tables.push_back(violations_table(found));
    return result;
}

ExperimentResult run_connectivity(const ExperimentConfig& config) {
    const auto& p = config.connectivity;
    Table t{"connectivity", {"n", "L", "trials", "p_hat", "stderr", "seed"}, {}};
    for (auto n : p.n) {
        std::vector<std::uint64_t> edges = p.edges;
        if (edges.empty()) {
            for (std::uint64_t l = 1; l <= netsim::max_edges(n); ++l) edges.push_back(l);
        }
        for (auto l : edges) {
            const auto seed = derive_seed(config.seed, {u64(n), l});
            const auto est = netsim::mc_path_probability(n, l, p.trials, seed, config.threads, p.model);
            t.rows.push_back({u64(n), l, u64(est.trials), est.p_hat, est.std_error, seed});
        }
    }
    ExperimentResult result;
    result.tables.push_back(std::move(t));
    result.tables.push_back(marker_table(p.n, p.marker_fraction));
    return result;
}

ExperimentResult run_attack_sweep(const ExperimentConfig& config) {
    const auto& p = config.attack;
    netsim::AttackSweepConfig sweep;
    sweep.deployment = p.deployment;
    sweep.densities = p.densities;
    sweep.fractions = p.fractions;
    sweep.trials = p.trials;
    sweep.coupled = p.coupled;
    sweep.seed = config.seed;
    sweep.threads = config.threads;
    const auto report = netsim::attack_sweep(sweep);

    Table cells{"attack",
                {"n", "f", "density", "trials", "p_hat", "stderr", "mean_spl", "mean_stretch", "seed"},
                {}};
    for (const auto& c : report.cells) {
        cells.rows.push_back({u64(c.node_count), c.fraction, c.density, u64(c.trials), c.p_hat, c.std_error,
                              c.mean_spl, c.mean_stretch, c.seed});
    }
    Table breakdown{"breakdown", {"density", "breakdown_f"}, {}};
    for (auto d : p.densities) {
        breakdown.rows.push_back({d, report.breakdown_fraction(d).value_or(std::nan(""))});
    }
    ExperimentResult result;
    result.tables.push_back(std::move(cells));
    result.tables.push_back(std::move(breakdown));
    return result;
}

namespace {

    netsim::Graph plain_topology(const ProtocolParams& p, std::uint64_t seed) {
        switch (p.topology.kind) {
            case TopologyKind::kRing:
                return netsim::Graph::ring(p.nodes);
            case TopologyKind::kPath:
                return netsim::Graph::path(p.nodes);
            case TopologyKind::kRandom: {
                auto rng = make_engine(derive_seed(seed, {kTopologyStream}));
                return netsim::gen_random_graph(p.nodes, p.topology.edges, rng);
            }
            default:
                return netsim::Graph::complete(p.nodes);
        }
    }

    consensus::ProtocolConfig engine_config(const ProtocolParams& p) {
        consensus::ProtocolConfig c;
        c.variant = p.variant;
        c.pruning = p.pruning;
        c.capacity = p.capacity;
        c.cycles = p.cycles;
        c.algorithm = p.algorithm;
        c.genesis_time = p.genesis_time;
        c.tick_ms = p.tick_ms;
        for (const auto& f : p.failures) {
            for (auto k : f.iterations) c.failures.set(f.node, k, f.status);
        }
        c.injections = p.injections;
        return c;
    }

    // Runs and merges the per-segment protocol runs of a hub/mobile network.
    // Membership is redrawn every cycle; each segment runs one cycle starting
    // from the last block confirmed by the segment before it.
    consensus::ProtocolRun run_segmented(const ProtocolParams& p, std::uint64_t seed, std::size_t& capacity) {
        const auto& t = p.topology;
        auto topo_rng = make_engine(derive_seed(seed, {kTopologyStream}));
        auto tx_rng = make_engine(derive_seed(seed, {kTransactionStream}));
        capacity = p.capacity ? p.capacity : t.mobiles_per_segment + 1;

        consensus::ProtocolRun merged;
        std::map<chain::NodeId, consensus::NodeState> nodes;
        std::optional<Block> carry;
        std::uint64_t offset = 0;
        std::uint64_t cumulative = 0;
        std::set<std::pair<std::uint64_t, chain::Digest>> seen;
        std::set<consensus::LostBlock> lost;

        for (std::size_t cycle = 0; cycle < p.cycles; ++cycle) {
            const auto topo = netsim::gen_segmented_topology(t.hubs, t.mobiles_per_segment, t.overlap, topo_rng);
            for (std::size_t s = 0; s < t.hubs; ++s) {
                // Hubs are nodes 1..H, mobiles H+1..H+M.
                std::vector<chain::NodeId> ids{s + 1};
                for (auto m : topo.segment_members[s]) ids.push_back(t.hubs + m + 1);
                const auto schedule = consensus::build_schedule(ids, netsim::Graph::complete(ids.size()));

                consensus::ProtocolConfig c;
                c.variant = p.variant;
                c.pruning = p.pruning;
                c.capacity = capacity;
                c.cycles = 1;
                c.algorithm = p.algorithm;
                c.genesis_time = p.genesis_time + offset * p.tick_ms;
                c.tick_ms = p.tick_ms;
                c.genesis = carry;
                auto run = consensus::run_protocol(schedule, c, tx_rng);

                for (auto& e : run.events) {
                    e.iteration += offset;
                    merged.events.push_back(std::move(e));
                }
                for (const auto& it : run.traffic) {
                    cumulative += it.bytes;
                    merged.traffic.push_back({it.iteration + offset, it.bytes, cumulative});
                }
                for (const auto& b : run.resultant.accepted) {
                    if (seen.insert({b.header.global_index, b.header.hash}).second) {
                        merged.resultant.accepted.push_back(b);
                    }
                }
                lost.insert(run.resultant.lost.begin(), run.resultant.lost.end());
                for (const auto& conf : run.resultant.confirmations) merged.resultant.confirmations.push_back(conf);
                merged.resultant.live_count = run.resultant.live_count;
                for (const auto& n : run.nodes) {
                    auto [it, fresh] = nodes.try_emplace(n.node_id, n);
                    if (!fresh) {
                        const auto traffic = it->second.traffic;
                        it->second = n;
                        it->second.traffic.bytes_sent += traffic.bytes_sent;
                        it->second.traffic.bytes_received += traffic.bytes_received;
                        it->second.traffic.messages_sent += traffic.messages_sent;
                        it->second.traffic.messages_received += traffic.messages_received;
                    }
                }
                if (!run.resultant.accepted.empty()) carry = run.resultant.accepted.back();
                offset += capacity;
            }
        }
        merged.resultant.lost.assign(lost.begin(), lost.end());
        for (auto& [id, n] : nodes) merged.nodes.push_back(std::move(n));
        return merged;
    }

}  // namespace

ExperimentResult run_protocol_experiment(const ExperimentConfig& config) {
    const auto& p = config.protocol;
    consensus::ProtocolRun run;
    std::size_t capacity = 0;
    if (p.topology.kind == TopologyKind::kSegmented) {
        run = run_segmented(p, config.seed, capacity);
    } else {
        const auto ids = consensus::sequential_ids(p.nodes);
        const auto schedule = consensus::build_schedule(ids, plain_topology(p, config.seed));
        auto rng = make_engine(derive_seed(config.seed, {kTransactionStream}));
        run = consensus::run_protocol(schedule, engine_config(p), rng);
        capacity = p.capacity ? p.capacity : p.nodes;
    }

    Table nodes{"nodes",
                {"node_id", "status", "window_size", "tip_index", "bytes_sent", "bytes_received", "messages_sent",
                 "messages_received"},
                {}};
    for (const auto& n : run.nodes) {
        nodes.rows.push_back({n.node_id, std::string{consensus::to_string(n.status)}, u64(n.chain.size()),
                              n.chain.tip().header.global_index, n.traffic.bytes_sent, n.traffic.bytes_received,
                              n.traffic.messages_sent, n.traffic.messages_received});
    }
    Table resultant{"resultant", {"global_index", "creator_id", "hash", "holders", "live_count", "accepted"}, {}};
    for (const auto& c : run.resultant.confirmations) {
        resultant.rows.push_back({c.global_index, c.creator_id, chain::to_hex(c.hash), c.holders,
                                  run.resultant.live_count, std::uint64_t{c.accepted ? 1u : 0u}});
    }
    Table lost{"lost", {"global_index", "creator_id"}, {}};
    for (const auto& l : run.resultant.lost) lost.rows.push_back({l.global_index, l.creator_id});
    Table traffic{"traffic", {"iteration", "bytes", "cumulative_bytes"}, {}};
    for (const auto& t : run.traffic) traffic.rows.push_back({t.iteration, t.bytes, t.cumulative_bytes});

    std::string full_chain = "ok";
    std::uint64_t violations = 0;
    try {
        const auto full = consensus::assemble_resultant(run.resultant, capacity, p.algorithm);
        violations = chain::validate_chain(full).size();
    } catch (const chain::ChainError& e) {
        full_chain = e.what();
    }
    Table summary{"summary",
                  {"accepted_blocks", "lost_blocks", "live_count", "total_bytes", "full_chain", "violations"},
                  {}};
    summary.rows.push_back({u64(run.resultant.accepted.size()), u64(run.resultant.lost.size()),
                            run.resultant.live_count, run.traffic.empty() ? 0 : run.traffic.back().cumulative_bytes,
                            full_chain, violations});

    ExperimentResult result;
    result.tables = {std::move(summary), std::move(nodes), std::move(resultant), std::move(lost),
                     std::move(traffic)};
    result.events = std::move(run.events);
    result.chain = std::move(run.resultant.accepted);
    return result;
}

ExperimentResult run_kind(const ExperimentConfig& config) {
    switch (config.kind) {
        case ExperimentKind::kChainReplay:
            return run_chain_replay(config);
        case ExperimentKind::kConnectivity:
            return run_connectivity(config);
        case ExperimentKind::kAttackSweep:
            return run_attack_sweep(config);
        case ExperimentKind::kProtocol:
            return run_protocol_experiment(config);
    }
    return {};
}

nlohmann::ordered_json to_json(const RunManifest& m) {
    return {{"tool", kToolName},   {"version", m.tool_version}, {"config_hash", m.config_hash},
            {"seed", m.seed},      {"parameters", m.parameters}, {"outputs", m.outputs},
            {"started_at", m.started_at}};
}

RunManifest run_experiment(const ExperimentConfig& config) {
    RunManifest manifest;
    manifest.config_hash = config_hash(config);
    manifest.tool_version = std::string{tool_version()};
    manifest.seed = config.seed;
    manifest.parameters = effective_config(config);
    manifest.started_at = fmt::format("{:%Y-%m-%dT%H:%M:%SZ}",
                                      std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now()));

    const auto tag = manifest.config_hash.substr(0, 12);
    auto result = run_kind(config);

    std::error_code ec;
    std::filesystem::create_directories(config.output, ec);
    if (ec) {
        throw HarnessError(HarnessErrc::kIoError,
                           {fmt::format("cannot create {}: {}", config.output.string(), ec.message())});
    }

    for (const auto& t : result.tables) manifest.outputs.push_back(file_name(t.name, tag, to_string(config.format)));
    const bool has_events = config.kind == ExperimentKind::kProtocol;
    if (has_events) manifest.outputs.push_back(file_name("events", tag, "ndjson"));
    if (!result.chain.empty()) manifest.outputs.push_back(file_name("chain", tag, "rbc"));

    {
        const auto path = config.output / file_name("manifest", tag, "json");
        std::ofstream out(path, std::ios::binary);
        if (!out) throw HarnessError(HarnessErrc::kIoError, {fmt::format("cannot write {}", path.string())});
        out << to_json(manifest).dump(2) << '\n';
    }

    for (const auto& t : result.tables) emit_report(t, config.output, tag, config.format);
    if (has_events) {
        const auto path = config.output / file_name("events", tag, "ndjson");
        std::ofstream out(path, std::ios::binary);
        if (!out) throw HarnessError(HarnessErrc::kIoError, {fmt::format("cannot write {}", path.string())});
        consensus::write_event_log(out, result.events);
    }
    if (!result.chain.empty()) {
        try {
            chain::write_chain_file(config.output / file_name("chain", tag, "rbc"), result.chain);
        } catch (const chain::ChainError& e) {
            throw HarnessError(HarnessErrc::kIoError, {e.what()});
        }
    }
    return manifest;
}

}  // namespace rollchain::harness
