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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aka/attacks.hpp"
#include "aka/messages.hpp"
#include "aka/mode.hpp"
#include "aka/state.hpp"
#include "aka/transcript.hpp"

namespace aka::runner {

enum class ScenarioId
{
    Normal,
    ReplayAuthSame,
    ReplayAuthDiff,
    ReplaySuciSame,
    ReplaySuciDiff,
    AutsAttack,
};

std::string_view to_string(ScenarioId id);
/// Throws ConfigError on an unknown id.
ScenarioId parse_scenario(std::string_view text);

/// Scenario rows of the outcome matrix, in display order.
inline constexpr std::array kMatrixScenarios = {
    ScenarioId::Normal,         ScenarioId::ReplayAuthDiff, ScenarioId::ReplayAuthSame,
    ScenarioId::ReplaySuciDiff, ScenarioId::ReplaySuciSame,
};

struct ScenarioConfig
{
    VariantMode variant = VariantMode::Baseline;
    ScenarioId scenario = ScenarioId::Normal;
    std::size_t subscribers = 2;
    std::uint32_t window = kDefaultWindow;
    std::uint64_t seed = 1;
    /// Vectors the adversary burns with the captured SUCI before replaying it.
    std::size_t suci_gap = 0;
    /// Honest registrations between the two replays of the AUTS attack.
    std::size_t auts_gap = 1;

    /// Throws ConfigError when the scenario cannot run with these values.
    void validate() const;

    [[nodiscard]] std::string to_toml() const;
    /// Keys absent from `text` keep their defaults.
    static ScenarioConfig from_toml(std::string_view text);
    static ScenarioConfig load(const std::filesystem::path &path);

    bool operator==(const ScenarioConfig &) const = default;
};

struct OutcomeRow
{
    ScenarioId scenario = ScenarioId::Normal;
    VariantMode variant = VariantMode::Baseline;
    /// "in-window" / "out-of-window" for a same-UE SUCI replay, empty otherwise.
    std::string subcase;
    /// nullopt when the transcript holds no terminal event ("opaque").
    std::optional<AuthOutcome> outcome;
    std::optional<adversary::Verdict> verdict;
    bool auts_present = false;
    bool nonce_reuse_logged = false;
    std::string detail;

    /// Scenario id with the subcase folded in, e.g. "replay-suci-same/in-window".
    [[nodiscard]] std::string label() const;
};

std::string outcome_text(const std::optional<AuthOutcome> &outcome);

struct ScenarioResult
{
    std::vector<TranscriptEvent> events;
    OutcomeRow row;
    double wall_ms = 0.0;
};

/// Builds a world from `cfg`, runs the scripted sequence and reads the outcome
/// back from the transcript. Bit-reproducible for a fixed config.
ScenarioResult run_scenario(const ScenarioConfig &cfg);

struct Classification
{
    std::optional<AuthOutcome> outcome;
    bool auts_present = false;
};

/// Outcome of the first terminal event at or after `from`: an SN verdict, a
/// failure frame, or a uniform reject.
Classification classify(const std::vector<TranscriptEvent> &events, std::size_t from);

/// The full grid for `variants`: every matrix scenario, with the same-UE SUCI
/// replay run once in-window (gap 0) and once out-of-window (gap = window).
std::vector<ScenarioConfig> matrix_configs(const std::vector<VariantMode> &variants, std::uint64_t seed,
                                           std::uint32_t window = kDefaultWindow, std::size_t subscribers = 2);

struct ExpectedCell
{
    AuthOutcome outcome;
    bool auts_present = false;
    bool nonce_reuse_logged = false;
};

/// Reference outcomes for baseline and nonce-in-suci. nullopt for other variants.
std::optional<ExpectedCell> expected_cell(ScenarioId scenario, std::string_view subcase, VariantMode variant);

/// True when `row` has no reference cell or agrees with it.
bool matches_expected(const OutcomeRow &row);

struct MatrixReport
{
    std::string table;
    std::string csv;
    std::vector<std::string> warnings;
    std::vector<std::string> mismatches;
};

/// Renders rows as an aligned grid plus CSV. When `out_dir` is set, writes
/// matrix.txt and matrix.csv there.
MatrixReport emit_outcome_matrix(const std::vector<OutcomeRow> &rows,
                                 const std::optional<std::filesystem::path> &out_dir = std::nullopt);

void write_transcript(const std::vector<TranscriptEvent> &events, const std::filesystem::path &path);
std::vector<TranscriptEvent> read_transcript(const std::filesystem::path &path);

std::string to_jsonl(const std::vector<TranscriptEvent> &events);
std::vector<TranscriptEvent> from_jsonl(std::string_view text);

} // namespace aka::runner
