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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aka/hn.hpp"
#include "aka/random.hpp"
#include "aka/sn.hpp"
#include "aka/tap.hpp"
#include "aka/transcript.hpp"
#include "aka/ue.hpp"

namespace aka::adversary {

inline constexpr std::string_view kDefaultSnName = "5G:mnc001.mcc001.3gppnetwork.org";

struct WorldConfig
{
    VariantMode mode = VariantMode::Baseline;
    std::size_t subscribers = 2;
    std::uint32_t window = kDefaultWindow;
    std::uint64_t seed = 1;
    std::string sn_name{kDefaultSnName};
    std::string mcc = "001";
    std::string mnc = "01";
    /// Starting counter for every UE and its HN record.
    Sqn initial_sqn;
    std::size_t nonce_cache_capacity = variants::kDefaultNonceCacheCapacity;
    /// Route the radio hop through a ChannelTap (otherwise a PlainLink).
    bool interpose_tap = true;
};

struct RegistrationRun
{
    /// SN-side outcome of each challenge round: the first attempt, then the
    /// round that follows a resynchronisation, if any.
    std::vector<AuthOutcome> outcomes;
    std::size_t first_event = 0;
};

/// One UE population, one SN and one HN wired over a radio link. All actors
/// draw from a single seeded stream, so a run is reproducible from its seed.
class World
{
  public:
    explicit World(const WorldConfig &config);
    World(const World &) = delete;
    World &operator=(const World &) = delete;

    /// Full registration of UE `ue`: SUCI, challenge, reply, SN verdict. A
    /// synch-failure carrying an AUTS is forwarded to the HN and the fresh
    /// challenge delivered once more when `follow_resync` is set.
    RegistrationRun register_ue(std::size_t ue, bool follow_resync = true);

    /// UE processing of a downlink frame without any logging. Returns the encoded reply.
    std::optional<Bytes> ue_receive(std::size_t ue, const Bytes &frame);

    /// Network side of a registration frame that never reaches a real UE:
    /// SN and HN process it and the downlink answer is returned undelivered.
    std::optional<Bytes> network_registration(const Bytes &frame, bool adversarial);

    [[nodiscard]] std::size_t ue_count() const
    {
        return m_ues.size();
    }
    Ue &ue(std::size_t i);
    Hn &hn()
    {
        return *m_hn;
    }
    Sn &sn()
    {
        return *m_sn;
    }
    Transcript &transcript()
    {
        return m_transcript;
    }
    [[nodiscard]] const Transcript &transcript() const
    {
        return m_transcript;
    }
    [[nodiscard]] bool has_tap() const
    {
        return m_tap != nullptr;
    }
    /// Throws Error when the world runs over a PlainLink.
    ChannelTap &tap();
    [[nodiscard]] const WorldConfig &config() const
    {
        return m_config;
    }

    /// Radio frames (UE <-> SN) logged at or after `first_event`.
    [[nodiscard]] std::size_t radio_frames_since(std::size_t first_event) const;

  private:
    struct Pending
    {
        std::optional<HeldSession> held;
        std::optional<Bytes> downlink;
    };

    Pending network_handle_registration(const Bytes &frame, std::optional<std::size_t> ue, bool adversarial);
    std::vector<AuthOutcome> deliver_challenge(std::size_t ue, const HeldSession &held, int resync_budget);
    std::vector<AuthOutcome> serve_reply(std::size_t ue, const SessionHandle &session, const Bytes &frame,
                                         int resync_budget);
    std::vector<AuthOutcome> serve_failure(std::size_t ue, const SessionHandle &session,
                                           const AuthenticationFailure &failure, int resync_budget);

    WorldConfig m_config;
    std::unique_ptr<SeededRandom> m_rng;
    Transcript m_transcript;
    std::unique_ptr<RadioLink> m_link;
    ChannelTap *m_tap = nullptr;
    std::unique_ptr<Hn> m_hn;
    std::unique_ptr<Sn> m_sn;
    std::vector<std::unique_ptr<Ue>> m_ues;
};

} // namespace aka::adversary
