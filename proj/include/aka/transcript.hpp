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
#include <string>
#include <string_view>
#include <vector>

#include "aka/bytes.hpp"
#include "aka/messages.hpp"

namespace aka {

enum class Direction
{
    UeToSn,
    SnToUe,
    SnToHn,
    HnToSn,
    /// Node-local record (SN verdict, HN security log); carries no frame.
    Local,
};

enum class EventKind
{
    Frame,
    Verdict,
    NonceReuse,
    Note,
};

std::string_view to_string(Direction d);
std::string_view to_string(EventKind k);
Direction parse_direction(std::string_view text);
EventKind parse_event_kind(std::string_view text);

struct TranscriptEvent
{
    std::size_t seq = 0;
    Direction direction = Direction::Local;
    EventKind kind = EventKind::Frame;
    std::uint8_t tag = 0;
    std::size_t length = 0;
    Bytes frame;
    std::string summary;
    /// Injected or substituted by the adversary.
    bool adversarial = false;
    /// Radio-side UE index, when the event is tied to one.
    std::optional<std::size_t> ue;

    bool operator==(const TranscriptEvent &) const = default;
};

/// Append-only event log. Sequence numbers are assigned on append.
class Transcript
{
  public:
    const TranscriptEvent &append(TranscriptEvent ev);

    const TranscriptEvent &frame(Direction d, const Bytes &frame, std::optional<std::size_t> ue = std::nullopt,
                                 bool adversarial = false, std::string note = {});
    const TranscriptEvent &verdict(AuthOutcome outcome, std::optional<std::size_t> ue = std::nullopt);
    const TranscriptEvent &nonce_reuse(const std::string &supi, ByteView nonce);
    const TranscriptEvent &note(std::string text, std::optional<std::size_t> ue = std::nullopt);

    [[nodiscard]] const std::vector<TranscriptEvent> &events() const
    {
        return m_events;
    }
    [[nodiscard]] std::size_t size() const
    {
        return m_events.size();
    }

  private:
    std::vector<TranscriptEvent> m_events;
};

/// Outcome recorded by a Verdict event ("outcome=<name>" in the summary).
std::optional<AuthOutcome> verdict_outcome(const TranscriptEvent &ev);

} // namespace aka
