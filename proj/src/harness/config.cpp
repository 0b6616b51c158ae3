// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <rollchain/harness/config.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include <rollchain/harness/errors.hpp>
#include <rollchain/netsim/graph.hpp>

namespace rollchain::harness {

std::string_view to_string(ExperimentKind kind) noexcept {
    switch (kind) {
        case ExperimentKind::kChainReplay:
            return "chain-replay";
        case ExperimentKind::kConnectivity:
            return "connectivity";
        case ExperimentKind::kAttackSweep:
            return "attack-sweep";
        case ExperimentKind::kProtocol:
            return "protocol";
    }
    return "unknown";
}

std::optional<ExperimentKind> parse_kind(std::string_view name) noexcept {
    if (name == "chain-replay") return ExperimentKind::kChainReplay;
    if (name == "connectivity" || name == "connectivity-sweep") return ExperimentKind::kConnectivity;
    if (name == "attack-sweep") return ExperimentKind::kAttackSweep;
    if (name == "protocol" || name == "protocol-on-topology") return ExperimentKind::kProtocol;
    return std::nullopt;
}

std::string_view to_string(OutputFormat format) noexcept {
    return format == OutputFormat::kJson ? "json" : "csv";
}

std::optional<OutputFormat> parse_format(std::string_view name) noexcept {
    if (name == "csv") return OutputFormat::kCsv;
    if (name == "json") return OutputFormat::kJson;
    return std::nullopt;
}

std::string_view to_string(TopologyKind kind) noexcept {
    switch (kind) {
        case TopologyKind::kComplete:
            return "complete";
        case TopologyKind::kRing:
            return "ring";
        case TopologyKind::kPath:
            return "path";
        case TopologyKind::kRandom:
            return "random";
        case TopologyKind::kSegmented:
            return "segmented";
    }
    return "unknown";
}

namespace {

    std::optional<TopologyKind> parse_topology(std::string_view name) {
        for (auto k : {TopologyKind::kComplete, TopologyKind::kRing, TopologyKind::kPath, TopologyKind::kRandom,
                       TopologyKind::kSegmented}) {
            if (to_string(k) == name) return k;
        }
        return std::nullopt;
    }

    std::optional<consensus::NodeStatus> parse_status(std::string_view name) {
        using consensus::NodeStatus;
        for (auto s : {NodeStatus::kAlive, NodeStatus::kFailed, NodeStatus::kIsolated}) {
            if (consensus::to_string(s) == name) return s;
        }
        return std::nullopt;
    }

    std::string join_path(const std::string& parent, const std::string& key) {
        return parent.empty() ? key : parent + "." + key;
    }

    // Walks the YAML tree, recording every problem instead of stopping at the first.
    class Reader {
      public:
        std::vector<std::string> problems;

        void problem(const std::string& path, const std::string& message) {
            problems.push_back(fmt::format("{}: {}", path, message));
        }

        void check_keys(const YAML::Node& map, const std::string& path, std::initializer_list<std::string_view> known) {
            if (!map.IsMap()) return;
            for (const auto& kv : map) {
                const auto key = kv.first.as<std::string>();
                if (std::ranges::find(known, key) == known.end()) problem(join_path(path, key), "unknown key");
            }
        }

        YAML::Node section(const YAML::Node& parent, const std::string& key, const std::string& path) {
            const auto node = parent[key];
            if (node && !node.IsMap()) {
                problem(join_path(path, key), "expected a mapping");
                return YAML::Node{};
            }
            return node;
        }

        std::optional<std::uint64_t> uint(const YAML::Node& node, const std::string& path) {
            if (!node.IsScalar()) {
                problem(path, "expected an unsigned integer");
                return std::nullopt;
            }
            const auto& s = node.Scalar();
            std::uint64_t value = 0;
            const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc{} || end != s.data() + s.size()) {
                problem(path, fmt::format("expected an unsigned integer, got '{}'", s));
                return std::nullopt;
            }
            return value;
        }

        std::optional<double> real(const YAML::Node& node, const std::string& path) {
            if (!node.IsScalar()) {
                problem(path, "expected a number");
                return std::nullopt;
            }
            const auto& s = node.Scalar();
            double value = 0.0;
            const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc{} || end != s.data() + s.size() || !std::isfinite(value)) {
                problem(path, fmt::format("expected a number, got '{}'", s));
                return std::nullopt;
            }
            return value;
        }

        std::optional<bool> boolean(const YAML::Node& node, const std::string& path) {
            bool value = false;
            if (!node.IsScalar() || !YAML::convert<bool>::decode(node, value)) {
                problem(path, "expected true or false");
                return std::nullopt;
            }
            return value;
        }

        std::optional<std::string> text(const YAML::Node& node, const std::string& path) {
            if (!node.IsScalar()) {
                problem(path, "expected a string");
                return std::nullopt;
            }
            return node.Scalar();
        }

        template <class T, class Fn>
        std::optional<std::vector<T>> list(const YAML::Node& node, const std::string& path, Fn&& item) {
            if (!node.IsSequence()) {
                problem(path, "expected a list");
                return std::nullopt;
            }
            std::vector<T> out;
            bool ok = true;
            for (std::size_t i = 0; i < node.size(); ++i) {
                auto v = item(node[i], fmt::format("{}[{}]", path, i));
                if (v) {
                    out.push_back(*v);
                } else {
                    ok = false;
                }
            }
            if (!ok) return std::nullopt;
            return out;
        }

        // Assigns `target` when `key` is present and well-formed.
        template <class T>
        void set_uint(const YAML::Node& map, const std::string& key, const std::string& path, T& target) {
            if (!map || !map[key]) return;
            if (auto v = uint(map[key], join_path(path, key))) target = static_cast<T>(*v);
        }

        void set_real(const YAML::Node& map, const std::string& key, const std::string& path, double& target) {
            if (!map || !map[key]) return;
            if (auto v = real(map[key], join_path(path, key))) target = *v;
        }

        template <class T, class Parse>
        void set_enum(const YAML::Node& map, const std::string& key, const std::string& path, T& target,
                      Parse&& parse, std::string_view choices) {
            if (!map || !map[key]) return;
            const auto p = join_path(path, key);
            if (auto s = text(map[key], p)) {
                if (auto v = parse(*s)) {
                    target = *v;
                } else {
                    problem(p, fmt::format("'{}' is not one of {}", *s, choices));
                }
            }
        }
    };

    void read_chain(Reader& r, const YAML::Node& node, ChainReplayParams& p) {
        const std::string path = "chain";
        r.check_keys(node, path, {"capacity", "blocks", "pruning", "hash", "genesis_time", "tick_ms"});
        r.set_uint(node, "capacity", path, p.capacity);
        r.set_uint(node, "blocks", path, p.blocks);
        r.set_enum(node, "pruning", path, p.pruning, chain::parse_pruning_mode, "reset, sliding");
        r.set_enum(node, "hash", path, p.algorithm, chain::parse_hash_algorithm, "sha256, sha3-256, blake2s-256");
        r.set_uint(node, "genesis_time", path, p.genesis_time);
        r.set_uint(node, "tick_ms", path, p.tick_ms);
        if (p.capacity == 0) r.problem("chain.capacity", "must be at least 1");
        if (p.tick_ms == 0) r.problem("chain.tick_ms", "must be positive");
    }

    void read_connectivity(Reader& r, const YAML::Node& node, ConnectivityParams& p) {
        const std::string path = "connectivity";
        if (!node) {
            r.problem(path, "section is required for this experiment");
            return;
        }
        r.check_keys(node, path, {"n", "n_min", "n_max", "L", "trials", "model", "marker_fraction"});
        auto as_uint = [&](const YAML::Node& n, const std::string& at) { return r.uint(n, at); };

        if (node["n"]) {
            if (node["n_min"] || node["n_max"]) r.problem("connectivity.n", "give either n or n_min/n_max, not both");
            if (auto v = r.list<std::uint64_t>(node["n"], "connectivity.n", as_uint)) {
                p.n.assign(v->begin(), v->end());
                if (p.n.empty()) r.problem("connectivity.n", "must not be empty");
            }
        } else if (node["n_min"] || node["n_max"]) {
            std::size_t lo = 2;
            std::size_t hi = 10;
            r.set_uint(node, "n_min", path, lo);
            r.set_uint(node, "n_max", path, hi);
            if (lo > hi) {
                r.problem("connectivity.n_min", fmt::format("{} exceeds n_max = {}", lo, hi));
            } else {
                for (auto n = lo; n <= hi; ++n) p.n.push_back(n);
            }
        } else {
            r.problem("connectivity.n", "missing (give n or n_min/n_max)");
        }
        for (auto n : p.n) {
            if (n < 2) r.problem("connectivity.n", fmt::format("{} is below 2", n));
        }

        if (node["L"]) {
            if (auto v = r.list<std::uint64_t>(node["L"], "connectivity.L", as_uint)) p.edges = *v;
            for (auto n : p.n) {
                const auto lmax = netsim::max_edges(n);
                for (auto l : p.edges) {
                    if (l > lmax) {
                        r.problem("connectivity.L", fmt::format("{} exceeds Lmax = n(n-1)/2 = {} for n = {}", l, lmax, n));
                    }
                }
            }
        }
        r.set_uint(node, "trials", path, p.trials);
        if (p.trials == 0) r.problem("connectivity.trials", "must be at least 1");
        r.set_enum(node, "model", path, p.model, netsim::parse_graph_model, "exact, bernoulli");
        r.set_real(node, "marker_fraction", path, p.marker_fraction);
        if (p.marker_fraction < 0.0 || p.marker_fraction > 1.0) {
            r.problem("connectivity.marker_fraction", "must lie in [0, 1]");
        }
    }

    void read_attack(Reader& r, const YAML::Node& node, AttackParams& p) {
        const std::string path = "attack";
        if (!node) {
            r.problem(path, "section is required for this experiment");
            return;
        }
        r.check_keys(node, path,
                     {"line_nodes", "spacing", "radius", "area", "densities", "fractions", "trials", "coupled"});
        auto& d = p.deployment;
        r.set_uint(node, "line_nodes", path, d.line_node_count);
        r.set_real(node, "spacing", path, d.spacing);
        r.set_real(node, "radius", path, d.radius);
        if (d.line_node_count < 2) r.problem("attack.line_nodes", "must be at least 2");
        if (d.spacing <= 0.0) r.problem("attack.spacing", "must be positive");
        if (d.radius <= 0.0) r.problem("attack.radius", "must be positive");

        d.area = netsim::default_area(d);
        if (auto area = r.section(node, "area", path)) {
            r.check_keys(area, "attack.area", {"x_min", "x_max", "y_min", "y_max"});
            r.set_real(area, "x_min", "attack.area", d.area.x_min);
            r.set_real(area, "x_max", "attack.area", d.area.x_max);
            r.set_real(area, "y_min", "attack.area", d.area.y_min);
            r.set_real(area, "y_max", "attack.area", d.area.y_max);
            if (d.area.width() <= 0.0 || d.area.height() <= 0.0) r.problem("attack.area", "has no extent");
        }

        auto as_real = [&](const YAML::Node& n, const std::string& at) { return r.real(n, at); };
        if (!node["densities"]) {
            r.problem("attack.densities", "missing");
        } else if (auto v = r.list<double>(node["densities"], "attack.densities", as_real)) {
            p.densities = *v;
            if (p.densities.empty()) r.problem("attack.densities", "must not be empty");
            for (auto x : p.densities) {
                if (x < 0.0) r.problem("attack.densities", fmt::format("{} is negative", x));
            }
        }
        if (!node["fractions"]) {
            r.problem("attack.fractions", "missing");
        } else if (auto v = r.list<double>(node["fractions"], "attack.fractions", as_real)) {
            p.fractions = *v;
            if (p.fractions.empty()) r.problem("attack.fractions", "must not be empty");
            for (auto f : p.fractions) {
                if (f < 0.0 || f > 1.0) r.problem("attack.fractions", fmt::format("{} is outside [0, 1]", f));
            }
            if (!std::ranges::is_sorted(p.fractions)) r.problem("attack.fractions", "must be ascending");
        }
        r.set_uint(node, "trials", path, p.trials);
        if (p.trials == 0) r.problem("attack.trials", "must be at least 1");
        if (node["coupled"]) {
            if (auto v = r.boolean(node["coupled"], "attack.coupled")) p.coupled = *v;
        }
    }

    void read_protocol(Reader& r, const YAML::Node& node, ProtocolParams& p) {
        const std::string path = "protocol";
        if (!node) {
            r.problem(path, "section is required for this experiment");
            return;
        }
        r.check_keys(node, path,
                     {"nodes", "topology", "variant", "pruning", "capacity", "cycles", "hash", "genesis_time",
                      "tick_ms", "failures", "injections"});
        r.set_uint(node, "nodes", path, p.nodes);
        r.set_enum(node, "variant", path, p.variant, consensus::parse_variant, "full-chain, single-block");
        r.set_enum(node, "pruning", path, p.pruning, chain::parse_pruning_mode, "reset, sliding");
        r.set_uint(node, "capacity", path, p.capacity);
        r.set_uint(node, "cycles", path, p.cycles);
        r.set_enum(node, "hash", path, p.algorithm, chain::parse_hash_algorithm, "sha256, sha3-256, blake2s-256");
        r.set_uint(node, "genesis_time", path, p.genesis_time);
        r.set_uint(node, "tick_ms", path, p.tick_ms);
        if (p.cycles == 0) r.problem("protocol.cycles", "must be at least 1");
        if (p.tick_ms == 0) r.problem("protocol.tick_ms", "must be positive");

        auto& t = p.topology;
        if (auto topo = r.section(node, "topology", path)) {
            const std::string tp = "protocol.topology";
            r.check_keys(topo, tp, {"kind", "edges", "hubs", "mobiles_per_segment", "overlap"});
            r.set_enum(topo, "kind", tp, t.kind, parse_topology, "complete, ring, path, random, segmented");
            r.set_uint(topo, "edges", tp, t.edges);
            r.set_uint(topo, "hubs", tp, t.hubs);
            r.set_uint(topo, "mobiles_per_segment", tp, t.mobiles_per_segment);
            r.set_uint(topo, "overlap", tp, t.overlap);
        }

        if (t.kind == TopologyKind::kSegmented) {
            if (t.hubs == 0) r.problem("protocol.topology.hubs", "must be at least 1");
            if (t.mobiles_per_segment == 0) r.problem("protocol.topology.mobiles_per_segment", "must be at least 1");
            if (t.hubs >= 2 && t.overlap == 0) {
                r.problem("protocol.topology.overlap", "must be at least 1 so segments can pass on their last block");
            }
            if (t.hubs >= 2 && t.overlap > t.mobiles_per_segment) {
                r.problem("protocol.topology.overlap", "exceeds mobiles_per_segment");
            }
            if (t.hubs >= 3 && 2 * t.overlap > t.mobiles_per_segment) {
                r.problem("protocol.topology.overlap", "more than half of mobiles_per_segment with three or more hubs");
            }
            if (node["failures"] || node["injections"]) {
                r.problem("protocol", "failures and injections are not supported on a segmented topology");
            }
            return;
        }

        if (p.nodes == 0) r.problem("protocol.nodes", "must be at least 1");
        if (t.kind == TopologyKind::kRandom && t.edges > netsim::max_edges(p.nodes)) {
            r.problem("protocol.topology.edges",
                      fmt::format("{} exceeds Lmax = n(n-1)/2 = {}", t.edges, netsim::max_edges(p.nodes)));
        }

        const auto capacity = p.capacity ? p.capacity : p.nodes;
        const auto turns = static_cast<std::uint64_t>(capacity) * p.cycles;
        auto valid_node = [&](std::uint64_t id, const std::string& at) {
            if (id < 1 || id > p.nodes) {
                r.problem(at, fmt::format("node {} is outside 1..{}", id, p.nodes));
                return false;
            }
            return true;
        };

        if (const auto list = node["failures"]) {
            if (!list.IsSequence()) {
                r.problem("protocol.failures", "expected a list");
            } else {
                for (std::size_t i = 0; i < list.size(); ++i) {
                    const auto item = list[i];
                    const auto at = fmt::format("protocol.failures[{}]", i);
                    if (!item.IsMap()) {
                        r.problem(at, "expected a mapping");
                        continue;
                    }
                    r.check_keys(item, at, {"node", "status", "iterations"});
                    FailureSpec spec;
                    if (!item["node"]) {
                        r.problem(at + ".node", "missing");
                    } else {
                        r.set_uint(item, "node", at, spec.node);
                        valid_node(spec.node, at + ".node");
                    }
                    r.set_enum(item, "status", at, spec.status, parse_status, "alive, failed, isolated");
                    if (!item["iterations"]) {
                        r.problem(at + ".iterations", "missing");
                    } else if (auto v = r.list<std::uint64_t>(item["iterations"], at + ".iterations",
                                                              [&](const YAML::Node& n, const std::string& s) {
                                                                  return r.uint(n, s);
                                                              })) {
                        spec.iterations = *v;
                        for (auto k : spec.iterations) {
                            if (k < 1 || k > turns) {
                                r.problem(at + ".iterations", fmt::format("{} is outside 1..{}", k, turns));
                            }
                        }
                    }
                    p.failures.push_back(std::move(spec));
                }
            }
        }

        if (const auto list = node["injections"]) {
            if (!list.IsSequence()) {
                r.problem("protocol.injections", "expected a list");
            } else {
                for (std::size_t i = 0; i < list.size(); ++i) {
                    const auto item = list[i];
                    const auto at = fmt::format("protocol.injections[{}]", i);
                    if (!item.IsMap()) {
                        r.problem(at, "expected a mapping");
                        continue;
                    }
                    r.check_keys(item, at, {"iteration", "sender", "target"});
                    consensus::Injection inj;
                    for (const auto* key : {"iteration", "sender", "target"}) {
                        if (!item[key]) r.problem(fmt::format("{}.{}", at, key), "missing");
                    }
                    r.set_uint(item, "iteration", at, inj.iteration);
                    r.set_uint(item, "sender", at, inj.sender);
                    r.set_uint(item, "target", at, inj.target);
                    if (!item["iteration"] || !item["sender"] || !item["target"]) continue;
                    bool ok = valid_node(inj.sender, at + ".sender");
                    ok = valid_node(inj.target, at + ".target") && ok;
                    if (inj.iteration < 1 || inj.iteration > turns) {
                        r.problem(at + ".iteration", fmt::format("{} is outside 1..{}", inj.iteration, turns));
                        ok = false;
                    }
                    if (ok && inj.sender == (inj.iteration - 1) % p.nodes + 1) {
                        r.problem(at + ".sender", fmt::format("node {} is the scheduled creator of iteration {}",
                                                              inj.sender, inj.iteration));
                    }
                    p.injections.push_back(inj);
                }
            }
        }
    }

    ExperimentConfig read_config(const YAML::Node& root, const Overrides& overrides) {
        Reader r;
        ExperimentConfig config;
        if (root && !root.IsNull() && !root.IsMap()) {
            throw HarnessError(HarnessErrc::kParseError, {"top level: expected a mapping"});
        }
        r.check_keys(root, "", {"kind", "seed", "threads", "output", "format", "chain", "connectivity", "attack",
                                "protocol"});

        std::optional<ExperimentKind> kind;
        if (root["kind"]) {
            if (auto s = r.text(root["kind"], "kind")) {
                kind = parse_kind(*s);
                if (!kind) {
                    r.problem("kind", fmt::format("'{}' is not one of chain-replay, connectivity, attack-sweep, protocol", *s));
                }
            }
        }
        if (overrides.kind) {
            if (kind && *kind != *overrides.kind) {
                r.problem("kind", fmt::format("config says '{}' but the command is '{}'", to_string(*kind),
                                              to_string(*overrides.kind)));
            }
            kind = overrides.kind;
        }
        if (!kind && !root["kind"]) r.problem("kind", "missing");

        if (overrides.seed) {
            config.seed = *overrides.seed;
        } else if (!root["seed"]) {
            r.problem("seed", "missing; every experiment needs an explicit seed");
        } else {
            r.set_uint(root, "seed", "", config.seed);
        }

        r.set_uint(root, "threads", "", config.threads);
        if (overrides.threads) config.threads = *overrides.threads;
        if (config.threads == 0) r.problem("threads", "must be at least 1");
        if (root["output"]) {
            if (auto s = r.text(root["output"], "output")) config.output = *s;
        }
        if (overrides.output) config.output = *overrides.output;
        r.set_enum(root, "format", "", config.format, parse_format, "csv, json");
        if (overrides.format) config.format = *overrides.format;

        if (kind) {
            config.kind = *kind;
            switch (*kind) {
                case ExperimentKind::kChainReplay:
                    read_chain(r, r.section(root, "chain", ""), config.chain);
                    break;
                case ExperimentKind::kConnectivity:
                    read_connectivity(r, r.section(root, "connectivity", ""), config.connectivity);
                    break;
                case ExperimentKind::kAttackSweep:
                    read_attack(r, r.section(root, "attack", ""), config.attack);
                    break;
                case ExperimentKind::kProtocol:
                    read_protocol(r, r.section(root, "protocol", ""), config.protocol);
                    break;
            }
        }

        if (!r.problems.empty()) throw HarnessError(HarnessErrc::kValidationError, std::move(r.problems));
        return config;
    }

}  // namespace

ExperimentConfig parse_config(std::string_view text, const Overrides& overrides) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string{text});
    } catch (const YAML::Exception& e) {
        throw HarnessError(HarnessErrc::kParseError, {fmt::format("line {}, column {}: {}", e.mark.line + 1,
                                                                  e.mark.column + 1, e.msg)});
    }
    return read_config(root, overrides);
}

ExperimentConfig load_config(const std::filesystem::path& path, const Overrides& overrides) {
    std::ifstream in(path);
    if (!in) throw HarnessError(HarnessErrc::kIoError, {fmt::format("cannot read {}", path.string())});
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), overrides);
}

nlohmann::ordered_json effective_config(const ExperimentConfig& config) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(config.kind);
    j["seed"] = config.seed;
    switch (config.kind) {
        case ExperimentKind::kChainReplay: {
            const auto& p = config.chain;
            j["chain"] = {{"capacity", p.capacity},
                          {"blocks", p.blocks},
                          {"pruning", chain::to_string(p.pruning)},
                          {"hash", chain::to_string(p.algorithm)},
                          {"genesis_time", p.genesis_time},
                          {"tick_ms", p.tick_ms}};
            break;
        }
        case ExperimentKind::kConnectivity: {
            const auto& p = config.connectivity;
            j["connectivity"] = {{"n", p.n},
                                 {"L", p.edges},
                                 {"trials", p.trials},
                                 {"model", netsim::to_string(p.model)},
                                 {"marker_fraction", p.marker_fraction}};
            break;
        }
        case ExperimentKind::kAttackSweep: {
            const auto& p = config.attack;
            const auto& d = p.deployment;
            j["attack"] = {{"line_nodes", d.line_node_count},
                           {"spacing", d.spacing},
                           {"radius", d.radius},
                           {"area",
                            {{"x_min", d.area.x_min}, {"x_max", d.area.x_max}, {"y_min", d.area.y_min},
                             {"y_max", d.area.y_max}}},
                           {"densities", p.densities},
                           {"fractions", p.fractions},
                           {"trials", p.trials},
                           {"coupled", p.coupled}};
            break;
        }
        case ExperimentKind::kProtocol: {
            const auto& p = config.protocol;
            nlohmann::ordered_json failures = nlohmann::ordered_json::array();
            for (const auto& f : p.failures) {
                failures.push_back(
                    {{"node", f.node}, {"status", consensus::to_string(f.status)}, {"iterations", f.iterations}});
            }
            nlohmann::ordered_json injections = nlohmann::ordered_json::array();
            for (const auto& i : p.injections) {
                injections.push_back({{"iteration", i.iteration}, {"sender", i.sender}, {"target", i.target}});
            }
            j["protocol"] = {{"nodes", p.nodes},
                             {"topology",
                              {{"kind", to_string(p.topology.kind)},
                               {"edges", p.topology.edges},
                               {"hubs", p.topology.hubs},
                               {"mobiles_per_segment", p.topology.mobiles_per_segment},
                               {"overlap", p.topology.overlap}}},
                             {"variant", consensus::to_string(p.variant)},
                             {"pruning", chain::to_string(p.pruning)},
                             {"capacity", p.capacity},
                             {"cycles", p.cycles},
                             {"hash", chain::to_string(p.algorithm)},
                             {"genesis_time", p.genesis_time},
                             {"tick_ms", p.tick_ms},
                             {"failures", failures},
                             {"injections", injections}};
            break;
        }
    }
    return j;
}

std::string config_hash(const ExperimentConfig& config) {
    const auto text = effective_config(config).dump();
    const auto d = chain::digest(chain::HashAlgorithm::kSha256,
                                 std::span{reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
    return chain::to_hex(d);
}

}  // namespace rollchain::harness
