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
#include <functional>
#include <map>
#include <optional>

#include "aka/bytes.hpp"
#include "aka/transcript.hpp"

namespace aka::adversary {

/// The UE <-> SN radio hop. Every frame crossing it is logged.
class RadioLink
{
  public:
    virtual ~RadioLink() = default;

    /// UE transmits; returns the frame the SN receives, or nullopt if it was dropped.
    virtual std::optional<Bytes> uplink(std::size_t ue, Bytes frame, Transcript &log) = 0;
    /// SN transmits; returns the frame the UE receives.
    virtual std::optional<Bytes> downlink(std::size_t ue, Bytes frame, Transcript &log) = 0;
};

/// Honest link without any interposition.
class PlainLink final : public RadioLink
{
  public:
    std::optional<Bytes> uplink(std::size_t ue, Bytes frame, Transcript &log) override;
    std::optional<Bytes> downlink(std::size_t ue, Bytes frame, Transcript &log) override;
};

using TagPredicate = std::function<bool(std::uint8_t)>;

TagPredicate tag_is(std::uint8_t tag);

struct CapturedFrame
{
    Bytes frame;
    Direction direction = Direction::UeToSn;
    std::size_t event_seq = 0;
    std::optional<std::size_t> ue;
};

/// Adversary-controlled link. With no rules armed it behaves exactly like
/// PlainLink. Capture rules copy the first matching frame and let it through;
/// a substitution rule swaps the next uplink frame that has the same tag.
class ChannelTap final : public RadioLink
{
  public:
    std::optional<Bytes> uplink(std::size_t ue, Bytes frame, Transcript &log) override;
    std::optional<Bytes> downlink(std::size_t ue, Bytes frame, Transcript &log) override;

    /// One-shot capture; returns a rule id for take_capture.
    std::size_t arm_capture(TagPredicate predicate);
    /// The captured frame, if the rule fired. Disarms the rule either way.
    std::optional<CapturedFrame> take_capture(std::size_t id);

    void arm_substitution(CapturedFrame replacement);
    [[nodiscard]] bool substitution_pending() const
    {
        return m_substitution.has_value();
    }

    [[nodiscard]] bool has_rules() const
    {
        return !m_captures.empty() || m_substitution.has_value();
    }
    void clear_rules();

  private:
    struct CaptureRule
    {
        TagPredicate predicate;
        std::optional<CapturedFrame> captured;
    };

    void apply_captures(const TranscriptEvent &ev);

    std::map<std::size_t, CaptureRule> m_captures;
    std::size_t m_next_rule = 0;
    std::optional<CapturedFrame> m_substitution;
};

} // namespace aka::adversary
