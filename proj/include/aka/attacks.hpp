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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "aka/bytes.hpp"
#include "aka/tap.hpp"
#include "aka/world.hpp"

namespace aka::adversary {

enum class Verdict
{
    SameSubscriber,
    DifferentSubscriber,
    Indeterminate,
};

std::string_view to_string(Verdict v);

struct AttackVerdict
{
    Verdict verdict = Verdict::Indeterminate;
    /// Transcript sequence numbers the verdict was read from.
    std::vector<std::size_t> evidence;
    /// The reply frame the adversary based its decision on (empty if none).
    Bytes observed;
    /// First transcript event of the probe phase.
    std::size_t probe_start = 0;
};

/// What a radio observer learns from a frame: envelopes reveal only their tag
/// and length, everything else is readable in full.
Bytes observable_view(ByteView frame);

/// Arms a capture on the world's tap, runs one honest registration of `ue`
/// and returns the first frame matching `predicate`. Throws CaptureTimeout if
/// nothing matched.
CapturedFrame capture(World &world, std::size_t ue, TagPredicate predicate);

/// Injects a captured downlink frame toward `target_ue` and logs the reply.
/// Returns the logged reply event, or nullopt when the UE stayed silent.
std::optional<TranscriptEvent> replay_to(World &world, const CapturedFrame &captured, std::size_t target_ue);

/// Arms the tap to swap the next registration frame for `captured_suci`.
void substitute_suci(World &world, const CapturedFrame &captured_suci);

/// Replays a captured challenge of `victim_ue` to `probe_ue` and reads the
/// cleartext failure cause.
AttackVerdict attack_failure_message(World &world, std::size_t victim_ue, std::size_t probe_ue);

/// Substitutes a captured SUCI of `victim_ue` into a registration of
/// `probe_ue` and reads the reply type. `burned_vectors` extra copies of the
/// SUCI are submitted first (challenges dropped) to push the HN counter ahead.
AttackVerdict attack_suci_replay(World &world, std::size_t victim_ue, std::size_t probe_ue,
                                 std::size_t burned_vectors = 0);

struct AutsDifferential
{
    FixedBytes<kSqnSize> differential{};
    Bytes first_auts_frame;
    Bytes second_auts_frame;
    /// First transcript event after the capture run.
    std::size_t probe_start = 0;
};

/// Replays one captured challenge to `victim_ue` twice, with
/// `gap_authentications` honest registrations in between, and XORs the CONC
/// fields of the two AUTS. Throws AttackFailed if a replay draws no AUTS.
AutsDifferential attack_auts_differential(World &world, std::size_t victim_ue, std::size_t gap_authentications);

struct DifferentialSample
{
    FixedBytes<kSqnSize> differential{};
    std::uint64_t gap = 0;
};

inline constexpr std::uint64_t kMaxInferenceBound = std::uint64_t{1} << 20;

/// All s in [0, bound) with s ^ (s + gap) == differential for every sample.
std::vector<std::uint64_t> infer_sqn(const std::vector<DifferentialSample> &samples, std::uint64_t bound);

} // namespace aka::adversary
