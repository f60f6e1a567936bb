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

#include <chrono>

#include "aka/codec.hpp"
#include "aka/errors.hpp"
#include "aka/runner.hpp"
#include "aka/variants.hpp"

namespace aka::runner {

namespace {

constexpr std::size_t kVictim = 0;
constexpr std::size_t kOther = 1;

bool carries_failure(const TranscriptEvent &ev)
{
    return ev.kind == EventKind::Frame && ev.tag == tag::kAuthenticationFailure &&
           (ev.direction == Direction::UeToSn || ev.direction == Direction::HnToSn);
}

bool nonce_reuse_since(const std::vector<TranscriptEvent> &events, std::size_t from)
{
    for (std::size_t i = from; i < events.size(); ++i)
        if (events[i].kind == EventKind::NonceReuse)
            return true;
    return false;
}

/// Index of the first injected frame, or the end of the log.
std::size_t first_adversarial(const std::vector<TranscriptEvent> &events)
{
    for (std::size_t i = 0; i < events.size(); ++i)
        if (events[i].adversarial)
            return i;
    return events.size();
}

} // namespace

std::string OutcomeRow::label() const
{
    std::string out(to_string(scenario));
    if (!subcase.empty())
        out += "/" + subcase;
    return out;
}

std::string outcome_text(const std::optional<AuthOutcome> &outcome)
{
    return outcome ? std::string(to_string(*outcome)) : std::string("opaque");
}

Classification classify(const std::vector<TranscriptEvent> &events, std::size_t from)
{
    for (std::size_t i = from; i < events.size(); ++i)
    {
        const auto &ev = events[i];
        if (ev.kind == EventKind::Verdict)
            return Classification{verdict_outcome(ev), false};
        if (ev.kind != EventKind::Frame)
            continue;
        if (carries_failure(ev))
        {
            const auto msg = decode_message(ev.frame);
            const auto &failure = std::get<AuthenticationFailure>(msg);
            const AuthOutcome o =
                failure.cause == FailureCause::SynchFailure ? AuthOutcome::SynchFailure : AuthOutcome::MacFailure;
            return Classification{o, failure.auts.has_value()};
        }
        if (variants::is_uniform_reject(ByteView(ev.frame)))
            return Classification{AuthOutcome::UniformReject, false};
    }
    return {};
}

ScenarioResult run_scenario(const ScenarioConfig &cfg)
{
    cfg.validate();
    const auto started = std::chrono::steady_clock::now();

    adversary::WorldConfig wc;
    wc.mode = cfg.variant;
    wc.subscribers = cfg.subscribers;
    wc.window = cfg.window;
    wc.seed = cfg.seed;
    adversary::World world(wc);

    OutcomeRow row;
    row.scenario = cfg.scenario;
    row.variant = cfg.variant;
    std::size_t probe_start = 0;

    switch (cfg.scenario)
    {
    case ScenarioId::Normal:
        probe_start = world.register_ue(kVictim).first_event;
        break;
    case ScenarioId::ReplayAuthSame:
    case ScenarioId::ReplayAuthDiff: {
        const std::size_t probe = cfg.scenario == ScenarioId::ReplayAuthSame ? kVictim : kOther;
        const auto v = adversary::attack_failure_message(world, kVictim, probe);
        row.verdict = v.verdict;
        probe_start = v.probe_start;
        break;
    }
    case ScenarioId::ReplaySuciSame:
    case ScenarioId::ReplaySuciDiff: {
        const bool same = cfg.scenario == ScenarioId::ReplaySuciSame;
        if (same)
            row.subcase = cfg.suci_gap >= cfg.window ? "out-of-window" : "in-window";
        const auto v = adversary::attack_suci_replay(world, kVictim, same ? kVictim : kOther, cfg.suci_gap);
        row.verdict = v.verdict;
        probe_start = v.probe_start;
        break;
    }
    case ScenarioId::AutsAttack: {
        try
        {
            const auto d = adversary::attack_auts_differential(world, kVictim, cfg.auts_gap);
            row.detail = "differential=" + to_hex(d.differential);
            probe_start = d.probe_start;
        }
        catch (const AttackFailed &e)
        {
            row.detail = std::string("attack failed: ") + e.what();
            probe_start = first_adversarial(world.transcript().events());
        }
        break;
    }
    }

    const auto &events = world.transcript().events();
    const Classification c = classify(events, probe_start);
    row.outcome = c.outcome;
    row.auts_present = c.auts_present;
    row.nonce_reuse_logged = nonce_reuse_since(events, probe_start);

    ScenarioResult out;
    out.events = events;
    out.row = std::move(row);
    out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return out;
}

std::vector<ScenarioConfig> matrix_configs(const std::vector<VariantMode> &variants, std::uint64_t seed,
                                           std::uint32_t window, std::size_t subscribers)
{
    std::vector<ScenarioConfig> out;
    for (auto mode : variants)
        for (auto id : kMatrixScenarios)
        {
            ScenarioConfig cfg;
            cfg.variant = mode;
            cfg.scenario = id;
            cfg.seed = seed;
            cfg.window = window;
            cfg.subscribers = subscribers;
            out.push_back(cfg);
            if (id == ScenarioId::ReplaySuciSame)
            {
                cfg.suci_gap = window;
                out.push_back(cfg);
            }
        }
    return out;
}

std::optional<ExpectedCell> expected_cell(ScenarioId scenario, std::string_view subcase, VariantMode variant)
{
    if (variant == VariantMode::NonceInSuci)
    {
        switch (scenario)
        {
        case ScenarioId::Normal:
            return ExpectedCell{AuthOutcome::Ok};
        case ScenarioId::ReplayAuthSame:
        case ScenarioId::ReplayAuthDiff:
            return ExpectedCell{AuthOutcome::UniformReject};
        case ScenarioId::ReplaySuciSame:
        case ScenarioId::ReplaySuciDiff:
            return ExpectedCell{AuthOutcome::UniformReject, false, true};
        default:
            return std::nullopt;
        }
    }
    if (variant != VariantMode::Baseline)
        return std::nullopt;
    switch (scenario)
    {
    case ScenarioId::Normal:
        return ExpectedCell{AuthOutcome::Ok};
    case ScenarioId::ReplayAuthDiff:
    case ScenarioId::ReplaySuciDiff:
        return ExpectedCell{AuthOutcome::MacFailure};
    case ScenarioId::ReplayAuthSame:
        return ExpectedCell{AuthOutcome::SynchFailure, true};
    case ScenarioId::ReplaySuciSame:
        if (subcase == "in-window")
            return ExpectedCell{AuthOutcome::Ok};
        if (subcase == "out-of-window")
            return ExpectedCell{AuthOutcome::SynchFailure};
        return std::nullopt;
    default:
        return std::nullopt;
    }
}

bool matches_expected(const OutcomeRow &row)
{
    const auto cell = expected_cell(row.scenario, row.subcase, row.variant);
    if (!cell)
        return true;
    if (row.outcome != cell->outcome)
        return false;
    if (cell->auts_present && !row.auts_present)
        return false;
    return !cell->nonce_reuse_logged || row.nonce_reuse_logged;
}

} // namespace aka::runner
