/* Copyright 2026 The aka-lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// aka: run scenarios, the replay outcome matrix and single attacks.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "aka/attacks.hpp"
#include "aka/errors.hpp"
#include "aka/runner.hpp"

namespace fs = std::filesystem;
using namespace aka;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;
constexpr int kExitMismatch = 3;

struct RunArgs
{
    std::string variant;
    std::string scenario;
    std::uint64_t seed = 1;
    std::uint32_t window = kDefaultWindow;
    std::size_t subscribers = 2;
    std::size_t suci_gap = 0;
    std::size_t auts_gap = 1;
    std::string out;
    std::string config;
};

struct MatrixArgs
{
    std::string variants = "baseline,nonce-in-suci";
    std::string out;
    std::uint64_t seed = 1;
    std::uint32_t window = kDefaultWindow;
    std::size_t subscribers = 2;
};

struct AttackArgs
{
    std::string kind;
    std::string variant = "baseline";
    std::uint64_t seed = 1;
    std::size_t subscribers = 8;
    std::size_t victim = 0;
    std::size_t probe = 1;
    std::size_t gap = 0;
};

std::string file_stem(const runner::OutcomeRow &row)
{
    std::string label = row.label();
    std::replace(label.begin(), label.end(), '/', '-');
    return fmt::format("{}-{}", to_string(row.variant), label);
}

void print_row(const runner::OutcomeRow &row)
{
    fmt::print("scenario={} variant={} outcome={} verdict={}", row.label(), to_string(row.variant),
               runner::outcome_text(row.outcome), row.verdict ? to_string(*row.verdict) : "-");
    if (row.auts_present)
        fmt::print(" auts=present");
    if (row.nonce_reuse_logged)
        fmt::print(" nonce-reuse=logged");
    if (!row.detail.empty())
        fmt::print(" {}", row.detail);
    fmt::print("\n");
}

int cmd_run(const CLI::App &sub, const RunArgs &args)
{
    runner::ScenarioConfig cfg;
    if (!args.config.empty())
        cfg = runner::ScenarioConfig::load(args.config);
    if (sub.count("--variant") != 0U)
        cfg.variant = parse_variant(args.variant);
    if (sub.count("--scenario") != 0U)
        cfg.scenario = runner::parse_scenario(args.scenario);
    if (sub.count("--seed") != 0U)
        cfg.seed = args.seed;
    if (sub.count("--window") != 0U)
        cfg.window = args.window;
    if (sub.count("--subscribers") != 0U)
        cfg.subscribers = args.subscribers;
    if (sub.count("--suci-gap") != 0U)
        cfg.suci_gap = args.suci_gap;
    if (sub.count("--auts-gap") != 0U)
        cfg.auts_gap = args.auts_gap;
    cfg.validate();

    const auto result = runner::run_scenario(cfg);
    print_row(result.row);
    if (!args.out.empty())
    {
        const fs::path dir(args.out);
        fs::create_directories(dir);
        runner::write_transcript(result.events, dir / "transcript.jsonl");
        std::ofstream(dir / "config.toml") << cfg.to_toml();
        fmt::print("wrote {}\n", (dir / "transcript.jsonl").string());
    }
    fmt::print("events={} wall-time={:.2f} ms\n", result.events.size(), result.wall_ms);
    return kExitOk;
}

std::vector<VariantMode> parse_variant_list(const std::string &text)
{
    std::vector<VariantMode> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty())
            out.push_back(parse_variant(item));
    if (out.empty())
        throw ConfigError("--variants needs at least one variant");
    return out;
}

int cmd_matrix(const MatrixArgs &args)
{
    const auto variants = parse_variant_list(args.variants);
    const auto started = std::chrono::steady_clock::now();

    std::vector<runner::OutcomeRow> rows;
    for (const auto &cfg : runner::matrix_configs(variants, args.seed, args.window, args.subscribers))
    {
        const auto result = runner::run_scenario(cfg);
        if (!args.out.empty())
            runner::write_transcript(result.events,
                                     fs::path(args.out) / "transcripts" / (file_stem(result.row) + ".jsonl"));
        rows.push_back(result.row);
    }

    std::optional<fs::path> out_dir;
    if (!args.out.empty())
        out_dir = fs::path(args.out);
    const auto report = runner::emit_outcome_matrix(rows, out_dir);
    fmt::print("{}", report.table);
    for (const auto &w : report.warnings)
        fmt::print(stderr, "warning: {}\n", w);
    for (const auto &m : report.mismatches)
        fmt::print(stderr, "mismatch: {}\n", m);

    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    fmt::print("cells={} wall-time={:.2f} ms\n", rows.size(), ms);
    return report.mismatches.empty() ? kExitOk : kExitMismatch;
}

int cmd_attack(const AttackArgs &args)
{
    adversary::WorldConfig wc;
    wc.mode = parse_variant(args.variant);
    wc.seed = args.seed;
    wc.subscribers = args.subscribers;
    if (args.victim >= args.subscribers || args.probe >= args.subscribers)
        throw ConfigError("--victim and --probe must be below --subscribers");
    adversary::World world(wc);

    if (args.kind == "auts-differential")
    {
        const auto d = adversary::attack_auts_differential(world, args.victim, args.gap);
        fmt::print("differential={} first-auts={} second-auts={}\n", to_hex(d.differential),
                   to_hex(d.first_auts_frame), to_hex(d.second_auts_frame));
        return kExitOk;
    }

    adversary::AttackVerdict v;
    if (args.kind == "failure-message")
        v = adversary::attack_failure_message(world, args.victim, args.probe);
    else if (args.kind == "suci-replay")
        v = adversary::attack_suci_replay(world, args.victim, args.probe, args.gap);
    else
        throw ConfigError("unknown attack kind: " + args.kind);

    fmt::print("verdict={} truth={} observed={}\n", to_string(v.verdict),
               args.victim == args.probe ? "same-subscriber" : "different-subscriber",
               to_hex(adversary::observable_view(v.observed)));
    return kExitOk;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"AKA replay-attack simulator"};
    app.require_subcommand(1);

    RunArgs run;
    auto *run_cmd = app.add_subcommand("run", "Run one scenario");
    run_cmd->add_option("--variant", run.variant, "Protocol variant");
    run_cmd->add_option("--scenario", run.scenario, "Scenario id");
    run_cmd->add_option("--seed", run.seed, "RNG seed");
    run_cmd->add_option("--window", run.window, "Acceptance window W");
    run_cmd->add_option("--subscribers", run.subscribers, "Number of UEs");
    run_cmd->add_option("--suci-gap", run.suci_gap, "Vectors burned before a SUCI replay");
    run_cmd->add_option("--auts-gap", run.auts_gap, "Honest runs between AUTS replays");
    run_cmd->add_option("--out", run.out, "Output directory for transcript and config");
    run_cmd->add_option("--config", run.config, "TOML config file; flags override it");

    MatrixArgs matrix;
    auto *matrix_cmd = app.add_subcommand("matrix", "Run the replay outcome matrix");
    matrix_cmd->add_option("--variants", matrix.variants, "Comma-separated variants")->capture_default_str();
    matrix_cmd->add_option("--out", matrix.out, "Output directory");
    matrix_cmd->add_option("--seed", matrix.seed, "RNG seed")->capture_default_str();
    matrix_cmd->add_option("--window", matrix.window, "Acceptance window W")->capture_default_str();
    matrix_cmd->add_option("--subscribers", matrix.subscribers, "Number of UEs")->capture_default_str();

    AttackArgs attack;
    auto *attack_cmd = app.add_subcommand("attack", "Run one attack");
    attack_cmd->add_option("--kind", attack.kind, "failure-message | suci-replay | auts-differential")->required();
    attack_cmd->add_option("--variant", attack.variant, "Protocol variant")->capture_default_str();
    attack_cmd->add_option("--seed", attack.seed, "RNG seed")->capture_default_str();
    attack_cmd->add_option("--subscribers", attack.subscribers, "Number of UEs")->capture_default_str();
    attack_cmd->add_option("--victim", attack.victim, "Victim UE index")->capture_default_str();
    attack_cmd->add_option("--probe", attack.probe, "Probe UE index")->capture_default_str();
    attack_cmd->add_option("--gap", attack.gap, "Burned vectors (suci-replay) or honest runs (auts-differential)")
        ->capture_default_str();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return kExitConfig;
    }

    try
    {
        if (run_cmd->parsed())
            return cmd_run(*run_cmd, run);
        if (matrix_cmd->parsed())
            return cmd_matrix(matrix);
        return cmd_attack(attack);
    }
    catch (const ConfigError &e)
    {
        fmt::print(stderr, "config error: {}\n", e.what());
        return kExitConfig;
    }
    catch (const Error &e)
    {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitRuntime;
    }
}
