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

#include "aka/tap.hpp"

namespace aka::adversary {

std::optional<Bytes> PlainLink::uplink(std::size_t ue, Bytes frame, Transcript &log)
{
    log.frame(Direction::UeToSn, frame, ue);
    return frame;
}

std::optional<Bytes> PlainLink::downlink(std::size_t ue, Bytes frame, Transcript &log)
{
    log.frame(Direction::SnToUe, frame, ue);
    return frame;
}

TagPredicate tag_is(std::uint8_t tag)
{
    return [tag](std::uint8_t t) { return t == tag; };
}

void ChannelTap::apply_captures(const TranscriptEvent &ev)
{
    for (auto &[id, rule] : m_captures)
    {
        if (rule.captured || !rule.predicate(ev.tag))
            continue;
        rule.captured = CapturedFrame{ev.frame, ev.direction, ev.seq, ev.ue};
    }
}

std::optional<Bytes> ChannelTap::uplink(std::size_t ue, Bytes frame, Transcript &log)
{
    if (m_substitution && !frame.empty() && !m_substitution->frame.empty() &&
        frame[0] == m_substitution->frame[0])
    {
        log.frame(Direction::UeToSn, frame, ue, false, "intercepted");
        Bytes replacement = std::move(m_substitution->frame);
        m_substitution.reset();
        const auto &ev = log.frame(Direction::UeToSn, replacement, ue, true, "substituted");
        apply_captures(ev);
        return replacement;
    }
    const auto &ev = log.frame(Direction::UeToSn, frame, ue);
    apply_captures(ev);
    return frame;
}

std::optional<Bytes> ChannelTap::downlink(std::size_t ue, Bytes frame, Transcript &log)
{
    const auto &ev = log.frame(Direction::SnToUe, frame, ue);
    apply_captures(ev);
    return frame;
}

std::size_t ChannelTap::arm_capture(TagPredicate predicate)
{
    const std::size_t id = m_next_rule++;
    m_captures.emplace(id, CaptureRule{std::move(predicate), std::nullopt});
    return id;
}

std::optional<CapturedFrame> ChannelTap::take_capture(std::size_t id)
{
    auto it = m_captures.find(id);
    if (it == m_captures.end())
        return std::nullopt;
    auto captured = std::move(it->second.captured);
    m_captures.erase(it);
    return captured;
}

void ChannelTap::arm_substitution(CapturedFrame replacement)
{
    m_substitution = std::move(replacement);
}

void ChannelTap::clear_rules()
{
    m_captures.clear();
    m_substitution.reset();
}

} // namespace aka::adversary
