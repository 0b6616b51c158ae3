// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <rollchain/harness/errors.hpp>
#include <rollchain/harness/runner.hpp>

using namespace rollchain::harness;

namespace {

struct Options {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<unsigned> threads;
    std::optional<std::string> format;
};

void add_common(CLI::App& cmd, Options& opts) {
    cmd.add_option("--config", opts.config, "YAML experiment description")->required()->check(CLI::ExistingFile);
    cmd.add_option("--seed", opts.seed, "master seed (overrides the config)");
    cmd.add_option("--out", opts.out, "output directory (overrides the config)");
    cmd.add_option("--threads", opts.threads, "worker threads for Monte Carlo trials")->check(CLI::PositiveNumber);
    cmd.add_option("--format", opts.format, "report format")->check(CLI::IsMember({"csv", "json"}));
}

int run(ExperimentKind kind, const Options& opts) {
    Overrides overrides;
    overrides.kind = kind;
    overrides.seed = opts.seed;
    overrides.threads = opts.threads;
    if (opts.out) overrides.output = *opts.out;
    if (opts.format) overrides.format = parse_format(*opts.format);

    try {
        const auto config = load_config(opts.config, overrides);
        const auto manifest = run_experiment(config);
        for (const auto& f : manifest.outputs) std::cout << (config.output / f).string() << '\n';
        return 0;
    } catch (const HarnessError& e) {
        std::cerr << "rollchain: " << to_string(e.code()) << '\n';
        for (const auto& p : e.problems()) std::cerr << "  " << p << '\n';
        return e.code() == HarnessErrc::kIoError ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "rollchain: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rolling blockchain and sensor-network experiments"};
    app.set_version_flag("--version", std::string{tool_version()});
    app.require_subcommand(1);

    Options opts;
    const std::pair<const char*, ExperimentKind> commands[] = {
        {"chain-replay", ExperimentKind::kChainReplay},
        {"connectivity", ExperimentKind::kConnectivity},
        {"attack-sweep", ExperimentKind::kAttackSweep},
        {"protocol", ExperimentKind::kProtocol},
    };
    const char* help[] = {
        "build, prune and validate a single rolling chain",
        "A-B path probability of random graphs by edge count",
        "link-removal attacks on linear roadside deployments",
        "run the block creation protocol on a topology",
    };
    std::vector<std::pair<CLI::App*, ExperimentKind>> subs;
    for (std::size_t i = 0; i < std::size(commands); ++i) {
        auto* cmd = app.add_subcommand(commands[i].first, help[i]);
        add_common(*cmd, opts);
        subs.emplace_back(cmd, commands[i].second);
    }

    CLI11_PARSE(app, argc, argv);
    for (const auto& [cmd, kind] : subs) {
        if (cmd->parsed()) return run(kind, opts);
    }
    return 1;
}
