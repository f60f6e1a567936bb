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

#include "aka/sn.hpp"

#include "aka/crypto.hpp"
#include "aka/errors.hpp"

namespace aka {

Sn::Sn(std::string name, RandomSource &rng) : m_name(std::move(name)), m_rng(rng)
{
    if (m_name.empty())
        throw ArgumentError("serving network name must not be empty");
}

HeldSession Sn::forward_and_hold(const AuthVector &vector)
{
    SessionHandle handle{};
    do
    {
        handle = m_rng.draw<8>();
    } while (m_sessions.contains(handle));
    m_sessions.emplace(handle, vector);
    return HeldSession{handle, AuthenticationRequest{vector.rand, vector.autn}};
}

const AuthVector &Sn::session(const SessionHandle &handle) const
{
    auto it = m_sessions.find(handle);
    if (it == m_sessions.end())
        throw UnknownSession("unknown SN session " + to_hex(handle));
    return it->second;
}

AuthOutcome Sn::verify_response(const SessionHandle &handle, const AuthenticationResponse &msg) const
{
    const AuthVector &v = session(handle);
    const HxresStar got = crypto::hash_res_star(v.rand, msg.res_star);
    return crypto::equal_ct(got, v.hxres_star) ? AuthOutcome::Ok : AuthOutcome::SnHashMismatch;
}

} // namespace aka
