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

#include "aka/attacks.hpp"

#include "aka/codec.hpp"
#include "aka/errors.hpp"

namespace aka::adversary {

namespace {

constexpr std::uint64_t kSqnMask = (std::uint64_t{1} << 48) - 1;

bool is_radio(const TranscriptEvent &ev)
{
    return ev.kind == EventKind::Frame && (ev.direction == Direction::UeToSn || ev.direction == Direction::SnToUe);
}

/// Runs one honest registration of `ue` with a capture armed. Also reports
/// where the run started in the transcript.
CapturedFrame capture_during(World &world, std::size_t ue, TagPredicate predicate, std::size_t &run_start)
{
    ChannelTap &tap = world.tap();
    const std::size_t id = tap.arm_capture(std::move(predicate));
    const RegistrationRun run = world.register_ue(ue);
    run_start = run.first_event;
    auto captured = tap.take_capture(id);
    if (!captured)
        throw CaptureTimeout("no matching frame crossed the tap during registration of UE " + std::to_string(ue));
    return *captured;
}

/// First UE reply on the radio at or after `from`, skipping registration frames.
const TranscriptEvent *first_ue_reply(const Transcript &log, std::size_t from)
{
    const auto &evs = log.events();
    for (std::size_t i = from; i < evs.size(); ++i)
        if (is_radio(evs[i]) && evs[i].direction == Direction::UeToSn && evs[i].tag != tag::kRegistrationRequest)
            return &evs[i];
    return nullptr;
}

const TranscriptEvent *first_downlink(const Transcript &log, std::size_t from)
{
    const auto &evs = log.events();
    for (std::size_t i = from; i < evs.size(); ++i)
        if (is_radio(evs[i]) && evs[i].direction == Direction::SnToUe)
            return &evs[i];
    return nullptr;
}

/// Reads the cleartext cause of a failure frame.
Verdict verdict_from_cause(const Bytes &frame)
{
    const auto msg = decode_message(frame);
    const auto &failure = std::get<AuthenticationFailure>(msg);
    return failure.cause == FailureCause::SynchFailure ? Verdict::SameSubscriber : Verdict::DifferentSubscriber;
}

Auts auts_of(const std::optional<TranscriptEvent> &ev)
{
    if (!ev)
        throw AttackFailed("replayed challenge drew no reply");
    if (ev->tag != tag::kAuthenticationFailure)
        throw AttackFailed("replayed challenge answered with " + std::string(message_name(ev->tag)));
    const auto msg = decode_message(ev->frame);
    const auto &failure = std::get<AuthenticationFailure>(msg);
    if (!failure.auts)
        throw AttackFailed("failure reply carries no AUTS");
    return *failure.auts;
}

} // namespace

std::string_view to_string(Verdict v)
{
    switch (v)
    {
    case Verdict::SameSubscriber:
        return "same-subscriber";
    case Verdict::DifferentSubscriber:
        return "different-subscriber";
    case Verdict::Indeterminate:
        return "indeterminate";
    }
    return "unknown";
}

Bytes observable_view(ByteView frame)
{
    if (!frame.empty() && frame[0] == tag::kUniformEnvelope)
        return Bytes{frame[0], static_cast<std::uint8_t>(frame.size() >> 8), static_cast<std::uint8_t>(frame.size())};
    return Bytes(frame.begin(), frame.end());
}

CapturedFrame capture(World &world, std::size_t ue, TagPredicate predicate)
{
    std::size_t run_start = 0;
    return capture_during(world, ue, std::move(predicate), run_start);
}

std::optional<TranscriptEvent> replay_to(World &world, const CapturedFrame &captured, std::size_t target_ue)
{
    Transcript &log = world.transcript();
    log.frame(Direction::SnToUe, captured.frame, target_ue, true, "replayed");
    auto reply = world.ue_receive(target_ue, captured.frame);
    if (!reply)
        return std::nullopt;
    // The adversary absorbs the reply; it never reaches the SN.
    return log.frame(Direction::UeToSn, *reply, target_ue, false, "absorbed by adversary");
}

void substitute_suci(World &world, const CapturedFrame &captured_suci)
{
    world.tap().arm_substitution(captured_suci);
}

AttackVerdict attack_failure_message(World &world, std::size_t victim_ue, std::size_t probe_ue)
{
    const CapturedFrame cap = capture(world, victim_ue, tag_is(tag::kAuthenticationRequest));

    AttackVerdict out;
    out.probe_start = world.transcript().size();
    out.evidence.push_back(cap.event_seq);
    const auto reply = replay_to(world, cap, probe_ue);
    if (!reply)
        return out;

    out.evidence.push_back(reply->seq);
    out.observed = reply->frame;
    if (reply->tag == tag::kAuthenticationFailure)
        out.verdict = verdict_from_cause(reply->frame);
    else if (reply->tag == tag::kAuthenticationResponse)
        out.verdict = Verdict::SameSubscriber;
    return out;
}

AttackVerdict attack_suci_replay(World &world, std::size_t victim_ue, std::size_t probe_ue,
                                 std::size_t burned_vectors)
{
    std::size_t run_start = 0;
    const CapturedFrame cap = capture_during(world, victim_ue, tag_is(tag::kRegistrationRequest), run_start);
    const TranscriptEvent *reference = first_ue_reply(world.transcript(), run_start);
    const std::uint8_t reference_tag = reference != nullptr ? reference->tag : 0;

    for (std::size_t i = 0; i < burned_vectors; ++i)
        world.network_registration(cap.frame, true);

    AttackVerdict out;
    out.evidence.push_back(cap.event_seq);
    out.probe_start = world.transcript().size();
    substitute_suci(world, cap);
    world.register_ue(probe_ue, false);

    const Transcript &log = world.transcript();
    const TranscriptEvent *reply = first_ue_reply(log, out.probe_start);
    if (reply == nullptr)
    {
        // The network answered on the downlink and the UE stayed silent.
        if (const TranscriptEvent *down = first_downlink(log, out.probe_start))
        {
            out.evidence.push_back(down->seq);
            out.observed = down->frame;
        }
        return out;
    }

    out.evidence.push_back(reply->seq);
    out.observed = reply->frame;
    switch (reply->tag)
    {
    case tag::kAuthenticationResponse:
        out.verdict = Verdict::SameSubscriber;
        break;
    case tag::kAuthenticationFailure:
        out.verdict = verdict_from_cause(reply->frame);
        break;
    case tag::kUniformEnvelope:
        // Only informative when honest responses travel in clear.
        if (reference_tag == tag::kAuthenticationResponse)
            out.verdict = Verdict::DifferentSubscriber;
        break;
    default:
        break;
    }
    return out;
}

AutsDifferential attack_auts_differential(World &world, std::size_t victim_ue, std::size_t gap_authentications)
{
    const CapturedFrame cap = capture(world, victim_ue, tag_is(tag::kAuthenticationRequest));

    AutsDifferential out;
    out.probe_start = world.transcript().size();
    const auto first = replay_to(world, cap, victim_ue);
    const Auts a1 = auts_of(first);
    for (std::size_t i = 0; i < gap_authentications; ++i)
        world.register_ue(victim_ue);
    const auto second = replay_to(world, cap, victim_ue);
    const Auts a2 = auts_of(second);

    out.differential = xor_bytes(a1.conc, a2.conc);
    out.first_auts_frame = first->frame;
    out.second_auts_frame = second->frame;
    return out;
}

std::vector<std::uint64_t> infer_sqn(const std::vector<DifferentialSample> &samples, std::uint64_t bound)
{
    if (samples.empty())
        throw ArgumentError("infer_sqn needs at least one sample");
    if (bound > kMaxInferenceBound)
        throw ArgumentError("infer_sqn bound exceeds 2^20");

    std::vector<std::uint64_t> diffs;
    diffs.reserve(samples.size());
    for (const auto &s : samples)
        diffs.push_back(Sqn::from_bytes(s.differential).value());

    std::vector<std::uint64_t> survivors;
    for (std::uint64_t s = 0; s < bound; ++s)
    {
        bool ok = true;
        for (std::size_t i = 0; i < samples.size() && ok; ++i)
            ok = ((s ^ ((s + samples[i].gap) & kSqnMask)) == diffs[i]);
        if (ok)
            survivors.push_back(s);
    }
    return survivors;
}

} // namespace aka::adversary
