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

#include <optional>
#include <string_view>
#include <vector>

#include "aka/messages.hpp"
#include "aka/random.hpp"
#include "aka/state.hpp"
#include "aka/variants.hpp"

namespace aka {

/// SQN_UE < sqn_prime <= SQN_UE + W, unsigned, no wraparound acceptance.
bool window_check(Sqn sqn_ue, Sqn sqn_prime, std::uint32_t w);

/// Baseline AUTS: CONC = SQN_UE ^ f5*(K, RAND), MAC-S = f1*(K, SQN_UE, RAND).
Auts ue_build_auts(const UeState &ue, const Rand &rand);

/// UE / USIM state machine. Single owner; not thread-safe.
class Ue
{
  public:
    Ue(UeState state, RandomSource &rng);

    /// Fresh SUCI under a fresh ephemeral key; payload layout follows the mode.
    RegistrationRequest build_registration();

    /// Checks a challenge and produces the wire reply for the active mode.
    ProtocolMessage handle_auth_request(const AuthenticationRequest &msg, std::string_view sn_name);

    /// Dispatches a downlink message. Returns the reply, if any.
    std::optional<ProtocolMessage> receive(const ProtocolMessage &msg, std::string_view sn_name);

    [[nodiscard]] const UeState &state() const
    {
        return m_state;
    }
    /// Test and provisioning hook.
    UeState &mutable_state()
    {
        return m_state;
    }

    /// Causes behind every uniform reject this UE emitted or received. Never on the wire.
    [[nodiscard]] const std::vector<variants::RejectCause> &reject_log() const
    {
        return m_rejects;
    }

  private:
    ProtocolMessage handle_sqn_challenge(const AuthenticationRequest &msg, std::string_view sn_name);
    ProtocolMessage handle_nonce_challenge(const AuthenticationRequest &msg, std::string_view sn_name);
    AuthenticationResponse respond(const Rand &rand, std::string_view sn_name) const;
    ProtocolMessage wrap(ProtocolMessage msg);

    UeState m_state;
    RandomSource &m_rng;
    std::vector<variants::RejectCause> m_rejects;
};

} // namespace aka
