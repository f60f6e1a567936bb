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

#include "aka/transcript.hpp"

#include <string>

#include "aka/codec.hpp"
#include "aka/errors.hpp"

namespace aka {

std::string_view to_string(Direction d)
{
    switch (d)
    {
    case Direction::UeToSn:
        return "ue->sn";
    case Direction::SnToUe:
        return "sn->ue";
    case Direction::SnToHn:
        return "sn->hn";
    case Direction::HnToSn:
        return "hn->sn";
    case Direction::Local:
        return "local";
    }
    return "unknown";
}

std::string_view to_string(EventKind k)
{
    switch (k)
    {
    case EventKind::Frame:
        return "frame";
    case EventKind::Verdict:
        return "verdict";
    case EventKind::NonceReuse:
        return "nonce-reuse";
    case EventKind::Note:
        return "note";
    }
    return "unknown";
}

Direction parse_direction(std::string_view text)
{
    for (auto d : {Direction::UeToSn, Direction::SnToUe, Direction::SnToHn, Direction::HnToSn, Direction::Local})
        if (to_string(d) == text)
            return d;
    throw ArgumentError("unknown direction '" + std::string(text) + "'");
}

EventKind parse_event_kind(std::string_view text)
{
    for (auto k : {EventKind::Frame, EventKind::Verdict, EventKind::NonceReuse, EventKind::Note})
        if (to_string(k) == text)
            return k;
    throw ArgumentError("unknown event kind '" + std::string(text) + "'");
}

const TranscriptEvent &Transcript::append(TranscriptEvent ev)
{
    ev.seq = m_events.size();
    m_events.push_back(std::move(ev));
    return m_events.back();
}

const TranscriptEvent &Transcript::frame(Direction d, const Bytes &frame, std::optional<std::size_t> ue,
                                         bool adversarial, std::string note)
{
    TranscriptEvent ev;
    ev.direction = d;
    ev.kind = EventKind::Frame;
    ev.tag = frame.empty() ? 0 : frame[0];
    ev.length = frame.size();
    ev.frame = frame;
    ev.adversarial = adversarial;
    ev.ue = ue;
    try
    {
        ev.summary = describe(decode_message(frame));
    }
    catch (const DecodeError &e)
    {
        ev.summary = std::string("undecodable: ") + e.what();
    }
    if (!note.empty())
        ev.summary += " [" + note + "]";
    return append(std::move(ev));
}

const TranscriptEvent &Transcript::verdict(AuthOutcome outcome, std::optional<std::size_t> ue)
{
    TranscriptEvent ev;
    ev.direction = Direction::Local;
    ev.kind = EventKind::Verdict;
    ev.summary = "sn outcome=" + std::string(to_string(outcome));
    ev.ue = ue;
    return append(std::move(ev));
}

const TranscriptEvent &Transcript::nonce_reuse(const std::string &supi, ByteView nonce)
{
    TranscriptEvent ev;
    ev.direction = Direction::Local;
    ev.kind = EventKind::NonceReuse;
    ev.summary = "hn nonce-reuse supi=" + supi + " nonce=" + to_hex(nonce);
    return append(std::move(ev));
}

const TranscriptEvent &Transcript::note(std::string text, std::optional<std::size_t> ue)
{
    TranscriptEvent ev;
    ev.direction = Direction::Local;
    ev.kind = EventKind::Note;
    ev.summary = std::move(text);
    ev.ue = ue;
    return append(std::move(ev));
}

std::optional<AuthOutcome> verdict_outcome(const TranscriptEvent &ev)
{
    if (ev.kind != EventKind::Verdict)
        return std::nullopt;
    static constexpr std::string_view kKey = "outcome=";
    auto pos = ev.summary.find(kKey);
    if (pos == std::string::npos)
        return std::nullopt;
    auto rest = std::string_view(ev.summary).substr(pos + kKey.size());
    rest = rest.substr(0, rest.find(' '));
    return parse_outcome(rest);
}

} // namespace aka
