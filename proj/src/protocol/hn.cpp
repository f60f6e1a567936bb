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

#include "aka/hn.hpp"

#include "aka/errors.hpp"

namespace aka {

Hn::Hn(VariantMode mode, crypto::KeyPair keys, RandomSource &rng, std::size_t nonce_cache_capacity)
    : m_mode(mode), m_keys(keys), m_rng(rng), m_nonces(nonce_cache_capacity)
{
}

void Hn::add_subscriber(SubscriberRecord record)
{
    const Msin key = record.supi.msin();
    m_records.insert_or_assign(key, std::move(record));
}

SubscriberRecord &Hn::lookup(const std::string &mcc, const std::string &mnc, const Msin &msin)
{
    auto it = m_records.find(msin);
    if (it == m_records.end() || it->second.supi.mcc() != mcc || it->second.supi.mnc() != mnc)
        throw SubscriberNotFound("no subscriber for MSIN " + to_hex(msin));
    return it->second;
}

SubscriberRecord &Hn::record(const SupiIdentity &supi)
{
    return lookup(supi.mcc(), supi.mnc(), supi.msin());
}

const SubscriberRecord &Hn::record(const SupiIdentity &supi) const
{
    auto it = m_records.find(supi.msin());
    if (it == m_records.end() || !(it->second.supi == supi))
        throw SubscriberNotFound("no subscriber " + supi.to_string());
    return it->second;
}

Challenge Hn::finish_vector(const SubscriberRecord &record, const Rand &rand, const Autn &autn,
                            std::string_view sn_name) const
{
    const Res res = crypto::f2(record.k, rand);
    const ResStar res_star = crypto::derive_res_star(record.k, res, rand, sn_name);

    Challenge c;
    c.request = AuthenticationRequest{rand, autn};
    c.vector.rand = rand;
    c.vector.autn = autn;
    c.vector.hxres_star = crypto::hash_res_star(rand, res_star);
    c.vector.supi = record.supi;
    return c;
}

Challenge Hn::issue_vector(SubscriberRecord &record, std::string_view sn_name)
{
    const Rand rand = m_rng.draw<kRandSize>();
    const Sqn sqn = record.sqn_hn.next();

    Autn autn;
    autn.conc = xor_bytes(sqn.bytes(), crypto::f5(record.k, rand));
    autn.amf = kDefaultAmf;
    autn.mac = crypto::f1(record.k, sqn.bytes(), rand, autn.amf);

    Challenge c = finish_vector(record, rand, autn, sn_name);
    record.sqn_hn = sqn;
    return c;
}

RegistrationReply Hn::handle_registration(const RegistrationRequest &msg, std::string_view sn_name)
{
    const Bytes plaintext = crypto::ecies_reveal(msg.suci.envelope, m_keys.secret);
    const variants::SuciPayload payload = variants::parse_suci_payload(m_mode, plaintext);
    SubscriberRecord &rec = lookup(msg.suci.mcc, msg.suci.mnc, payload.msin);

    switch (m_mode)
    {
    case VariantMode::SqnInSuci:
        variants::hn_sync_from_suci(rec, *payload.sqn_ue);
        return RegistrationReply{issue_vector(rec, sn_name), std::nullopt};

    case VariantMode::NonceInSuci: {
        if (variants::nonce_cache_check(m_nonces, rec.supi, *payload.nonce, m_log) == variants::NonceCheck::Replayed)
        {
            m_rejects.push_back(variants::RejectCause::NonceReuse);
            return RegistrationReply{std::nullopt, variants::uniform_reject()};
        }
        const Rand rand = m_rng.draw<kRandSize>();
        const Autn autn = variants::challenge_freshness_binding(rec.k, *payload.nonce, rand);
        return RegistrationReply{finish_vector(rec, rand, autn, sn_name), std::nullopt};
    }

    default:
        return RegistrationReply{issue_vector(rec, sn_name), std::nullopt};
    }
}

Challenge Hn::handle_auts(const SupiIdentity &supi, const Auts &auts, const Rand &rand, std::string_view sn_name)
{
    if (m_mode == VariantMode::NonceInSuci)
        throw ResyncRejected("nonce-in-SUCI has no sequence numbers to resynchronise");
    const bool expects_nonce = m_mode == VariantMode::NonceInAuts;
    if (auts.nonce_ue.has_value() != expects_nonce)
        throw ResyncRejected(expects_nonce ? "AUTS lacks RAND_UE" : "unexpected RAND_UE in AUTS");

    SubscriberRecord &rec = record(supi);
    const ByteView mask_input = expects_nonce ? ByteView(*auts.nonce_ue) : ByteView(rand);

    const Sqn sqn_ue = Sqn::from_bytes(xor_bytes(auts.conc, crypto::f5_star(rec.k, mask_input)));
    const Mac64 expected = crypto::f1_star(rec.k, sqn_ue.bytes(), mask_input);
    if (!crypto::equal_ct(expected, auts.mac_s))
        throw ResyncRejected("MAC-S mismatch");

    rec.sqn_hn = sqn_ue;
    return issue_vector(rec, sn_name);
}

ProtocolMessage Hn::open_envelope(const UniformEnvelope &env) const
{
    return variants::decrypt_uniform(env, m_keys.secret);
}

} // namespace aka
