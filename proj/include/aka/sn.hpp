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

#include <map>
#include <string>
#include <string_view>

#include "aka/messages.hpp"
#include "aka/random.hpp"

namespace aka {

/// Opaque 8-byte handle minted by the SN for each held vector.
using SessionHandle = FixedBytes<8>;

struct HeldSession
{
    SessionHandle handle{};
    AuthenticationRequest request;
};

/// Serving network: relays challenges and checks RES* against HXRES*.
/// Holds no subscriber key material.
class Sn
{
  public:
    Sn(std::string name, RandomSource &rng);

    /// Stores the vector's HXRES* under a fresh handle and returns the
    /// challenge to forward (RAND and AUTN unchanged).
    HeldSession forward_and_hold(const AuthVector &vector);

    /// Ok iff hash(RAND, RES*) equals the held HXRES*. Throws UnknownSession.
    AuthOutcome verify_response(const SessionHandle &session, const AuthenticationResponse &msg) const;

    /// Throws UnknownSession.
    [[nodiscard]] const AuthVector &session(const SessionHandle &handle) const;
    [[nodiscard]] std::size_t session_count() const
    {
        return m_sessions.size();
    }

    [[nodiscard]] const std::string &name() const
    {
        return m_name;
    }

  private:
    std::string m_name;
    RandomSource &m_rng;
    std::map<SessionHandle, AuthVector> m_sessions;
};

} // namespace aka
