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

#include "aka/messages.hpp"

#include <string>

#include "aka/errors.hpp"

namespace aka {

namespace {

template <class... Ts>
struct Overloaded : Ts...
{
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string_view cause_name(FailureCause c)
{
    return c == FailureCause::MacFailure ? "mac-failure" : "synch-failure";
}

} // namespace

std::uint8_t message_tag(const ProtocolMessage &msg)
{
    return static_cast<std::uint8_t>(msg.index() + 1);
}

std::string_view message_name(std::uint8_t t)
{
    switch (t)
    {
    case tag::kRegistrationRequest:
        return "RegistrationRequest";
    case tag::kAuthenticationRequest:
        return "AuthenticationRequest";
    case tag::kAuthenticationResponse:
        return "AuthenticationResponse";
    case tag::kAuthenticationFailure:
        return "AuthenticationFailure";
    case tag::kUniformEnvelope:
        return "UniformEnvelope";
    default:
        return "Unknown";
    }
}

std::string describe(const ProtocolMessage &msg)
{
    return std::visit(
        Overloaded{
            [](const RegistrationRequest &m) {
                return "RegistrationRequest mcc=" + m.suci.mcc + " mnc=" + m.suci.mnc +
                       " eph=" + to_hex(m.suci.envelope.ephemeral_public).substr(0, 16) +
                       " ct_len=" + std::to_string(m.suci.envelope.ciphertext.size());
            },
            [](const AuthenticationRequest &m) {
                return "AuthenticationRequest rand=" + to_hex(m.rand) + " conc=" + to_hex(m.autn.conc) +
                       " amf=" + to_hex(m.autn.amf) + " mac=" + to_hex(m.autn.mac);
            },
            [](const AuthenticationResponse &m) { return "AuthenticationResponse res*=" + to_hex(m.res_star); },
            [](const AuthenticationFailure &m) {
                std::string s = "AuthenticationFailure cause=" + std::string(cause_name(m.cause));
                if (m.auts)
                {
                    s += " auts.conc=" + to_hex(m.auts->conc) + " auts.mac_s=" + to_hex(m.auts->mac_s);
                    if (m.auts->nonce_ue)
                        s += " auts.nonce=" + to_hex(*m.auts->nonce_ue);
                }
                return s;
            },
            [](const UniformEnvelope &m) {
                return "UniformEnvelope ct_len=" + std::to_string(m.envelope.ciphertext.size());
            },
        },
        msg);
}

std::string_view to_string(AuthOutcome outcome)
{
    switch (outcome)
    {
    case AuthOutcome::Ok:
        return "ok";
    case AuthOutcome::MacFailure:
        return "mac-failure";
    case AuthOutcome::SynchFailure:
        return "synch-failure";
    case AuthOutcome::UniformReject:
        return "uniform-reject";
    case AuthOutcome::SnHashMismatch:
        return "sn-hash-mismatch";
    }
    return "unknown";
}

AuthOutcome parse_outcome(std::string_view text)
{
    for (auto o : {AuthOutcome::Ok, AuthOutcome::MacFailure, AuthOutcome::SynchFailure, AuthOutcome::UniformReject,
                   AuthOutcome::SnHashMismatch})
        if (to_string(o) == text)
            return o;
    throw ArgumentError("unknown outcome '" + std::string(text) + "'");
}

} // namespace aka
