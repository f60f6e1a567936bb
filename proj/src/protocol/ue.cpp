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

#include "aka/ue.hpp"

#include "aka/errors.hpp"

namespace aka {

bool window_check(Sqn sqn_ue, Sqn sqn_prime, std::uint32_t w)
{
    if (w == 0)
        throw ArgumentError("acceptance window must be at least 1");
    // Compare in 64 bits: sqn_ue + w cannot overflow since sqn_ue < 2^48.
    return sqn_ue.value() < sqn_prime.value() && sqn_prime.value() <= sqn_ue.value() + w;
}

Auts ue_build_auts(const UeState &ue, const Rand &rand)
{
    Auts auts;
    auts.conc = xor_bytes(ue.sqn_ue.bytes(), crypto::f5_star(ue.k, rand));
    auts.mac_s = crypto::f1_star(ue.k, ue.sqn_ue.bytes(), rand);
    return auts;
}

Ue::Ue(UeState state, RandomSource &rng) : m_state(std::move(state)), m_rng(rng)
{
    if (m_state.window_w == 0)
        throw ArgumentError("acceptance window must be at least 1");
}

RegistrationRequest Ue::build_registration()
{
    if (m_state.variant == VariantMode::NonceInSuci)
        m_state.pending_nonce = m_rng.draw<kRandSize>();
    const Bytes payload = variants::build_suci_payload(m_state);

    RegistrationRequest req;
    req.suci.mcc = m_state.supi.mcc();
    req.suci.mnc = m_state.supi.mnc();
    req.suci.envelope = crypto::ecies_conceal(payload, m_state.hn_public, m_rng);
    return req;
}

AuthenticationResponse Ue::respond(const Rand &rand, std::string_view sn_name) const
{
    const Res res = crypto::f2(m_state.k, rand);
    return AuthenticationResponse{crypto::derive_res_star(m_state.k, res, rand, sn_name)};
}

ProtocolMessage Ue::wrap(ProtocolMessage msg)
{
    if (variants::wraps_in_envelope(m_state.variant, msg))
        return variants::encrypt_uniform(msg, m_state.hn_public, m_rng);
    return msg;
}

ProtocolMessage Ue::handle_sqn_challenge(const AuthenticationRequest &msg, std::string_view sn_name)
{
    const auto &k = m_state.k;
    const Ak48 ak = crypto::f5(k, msg.rand);
    const Sqn sqn_prime = Sqn::from_bytes(xor_bytes(msg.autn.conc, ak));
    const Mac64 expected = crypto::f1(k, sqn_prime.bytes(), msg.rand, msg.autn.amf);
    if (!crypto::equal_ct(expected, msg.autn.mac))
        return wrap(AuthenticationFailure{FailureCause::MacFailure, std::nullopt});

    if (!window_check(m_state.sqn_ue, sqn_prime, m_state.window_w))
    {
        AuthenticationFailure failure{FailureCause::SynchFailure, std::nullopt};
        switch (m_state.variant)
        {
        case VariantMode::NonceInAuts:
            failure.auts = variants::build_auts_with_nonce(m_state, m_rng);
            break;
        case VariantMode::SqnInSuci:
            // The next SUCI carries SQN_UE; no AUTS is needed.
            break;
        default:
            failure.auts = ue_build_auts(m_state, msg.rand);
            break;
        }
        return wrap(failure);
    }

    m_state.sqn_ue = sqn_prime;
    return wrap(respond(msg.rand, sn_name));
}

ProtocolMessage Ue::handle_nonce_challenge(const AuthenticationRequest &msg, std::string_view sn_name)
{
    if (!m_state.pending_nonce)
    {
        m_rejects.push_back(variants::RejectCause::StaleNonce);
        return variants::uniform_reject();
    }
    if (!variants::freshness_binding_holds(m_state.k, *m_state.pending_nonce, msg.rand, msg.autn))
    {
        m_rejects.push_back(variants::RejectCause::MacFailure);
        return variants::uniform_reject();
    }
    m_state.pending_nonce.reset();
    return respond(msg.rand, sn_name);
}

ProtocolMessage Ue::handle_auth_request(const AuthenticationRequest &msg, std::string_view sn_name)
{
    if (m_state.variant == VariantMode::NonceInSuci)
        return handle_nonce_challenge(msg, sn_name);
    return handle_sqn_challenge(msg, sn_name);
}

std::optional<ProtocolMessage> Ue::receive(const ProtocolMessage &msg, std::string_view sn_name)
{
    if (auto *req = std::get_if<AuthenticationRequest>(&msg))
        return handle_auth_request(*req, sn_name);
    if (variants::is_uniform_reject(msg))
        m_state.pending_nonce.reset();
    return std::nullopt;
}

} // namespace aka
