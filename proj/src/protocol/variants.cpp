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

#include "aka/variants.hpp"

#include <algorithm>
#include <string>

#include "aka/codec.hpp"
#include "aka/errors.hpp"

namespace aka::variants {

namespace {

constexpr std::size_t kSurrogateSize = kSqnSize;

FixedBytes<kSurrogateSize> surrogate_counter(const UeNonce &rand_ue)
{
    FixedBytes<kSurrogateSize> out{};
    std::copy_n(rand_ue.begin(), kSurrogateSize, out.begin());
    return out;
}

UniformEnvelope make_reject()
{
    static constexpr std::string_view kLabel = "uniform-reject";
    UniformEnvelope env;
    env.envelope.ciphertext = pad_message(ByteView(reinterpret_cast<const std::uint8_t *>(kLabel.data()), kLabel.size()),
                                          kUniformPadLength);
    return env;
}

} // namespace

std::size_t suci_payload_size(VariantMode mode)
{
    switch (mode)
    {
    case VariantMode::SqnInSuci:
        return kMsinSize + kSqnSize;
    case VariantMode::NonceInSuci:
        return kMsinSize + kRandSize;
    default:
        return kMsinSize;
    }
}

Bytes build_suci_payload(const UeState &ue)
{
    Bytes out(ue.supi.msin().begin(), ue.supi.msin().end());
    switch (ue.variant)
    {
    case VariantMode::SqnInSuci:
        append(out, ue.sqn_ue.bytes());
        break;
    case VariantMode::NonceInSuci:
        if (!ue.pending_nonce)
            throw ArgumentError("nonce-in-SUCI registration without a pending RAND_UE");
        append(out, *ue.pending_nonce);
        break;
    default:
        break;
    }
    return out;
}

SuciPayload parse_suci_payload(VariantMode mode, ByteView plaintext)
{
    const std::size_t expected = suci_payload_size(mode);
    if (plaintext.size() != expected)
        throw DecodeError("SUCI payload has " + std::to_string(plaintext.size()) + " bytes, expected " +
                              std::to_string(expected),
                          std::min(plaintext.size(), expected));
    SuciPayload out;
    std::copy_n(plaintext.begin(), kMsinSize, out.msin.begin());
    auto rest = plaintext.subspan(kMsinSize);
    if (mode == VariantMode::SqnInSuci)
        out.sqn_ue = Sqn::from_bytes(rest);
    else if (mode == VariantMode::NonceInSuci)
    {
        UeNonce n{};
        std::copy(rest.begin(), rest.end(), n.begin());
        out.nonce = n;
    }
    return out;
}

Sqn hn_sync_from_suci(SubscriberRecord &record, Sqn reported_sqn_ue)
{
    record.sqn_hn = reported_sqn_ue;
    return reported_sqn_ue.next();
}

Autn challenge_freshness_binding(const crypto::LongTermKey &k, const UeNonce &rand_ue, const Rand &rand)
{
    const auto surrogate = surrogate_counter(rand_ue);
    Autn autn;
    autn.conc = xor_bytes(surrogate, crypto::f5(k, rand));
    autn.amf = kDefaultAmf;
    autn.mac = crypto::f1(k, surrogate, rand, autn.amf, rand_ue);
    return autn;
}

bool freshness_binding_holds(const crypto::LongTermKey &k, const UeNonce &rand_ue, const Rand &rand,
                             const Autn &autn)
{
    const auto surrogate = xor_bytes(autn.conc, crypto::f5(k, rand));
    if (!crypto::equal_ct(surrogate, surrogate_counter(rand_ue)))
        return false;
    return crypto::equal_ct(crypto::f1(k, surrogate, rand, autn.amf, rand_ue), autn.mac);
}

NonceCache::NonceCache(std::size_t capacity) : m_capacity(capacity)
{
    if (capacity == 0)
        throw ArgumentError("nonce cache capacity must be positive");
}

NonceCheck NonceCache::check_and_insert(const SupiIdentity &supi, const UeNonce &nonce)
{
    Entry &e = m_entries[supi];
    if (e.members.contains(nonce))
        return NonceCheck::Replayed;
    if (e.order.size() == m_capacity)
    {
        e.members.erase(e.order.front());
        e.order.pop_front();
    }
    e.order.push_back(nonce);
    e.members.insert(nonce);
    return NonceCheck::Fresh;
}

bool NonceCache::contains(const SupiIdentity &supi, const UeNonce &nonce) const
{
    auto it = m_entries.find(supi);
    return it != m_entries.end() && it->second.members.contains(nonce);
}

std::size_t NonceCache::size(const SupiIdentity &supi) const
{
    auto it = m_entries.find(supi);
    return it == m_entries.end() ? 0 : it->second.order.size();
}

NonceCheck nonce_cache_check(NonceCache &cache, const SupiIdentity &supi, const UeNonce &rand_ue, Transcript *log)
{
    const NonceCheck r = cache.check_and_insert(supi, rand_ue);
    if (r == NonceCheck::Replayed && log != nullptr)
        log->nonce_reuse(supi.to_string(), rand_ue);
    return r;
}

bool wraps_in_envelope(VariantMode mode, const ProtocolMessage &msg)
{
    const bool failure = std::holds_alternative<AuthenticationFailure>(msg);
    const bool response = std::holds_alternative<AuthenticationResponse>(msg);
    switch (mode)
    {
    case VariantMode::EncFailure:
        return failure;
    case VariantMode::EncResponse:
        return failure || response;
    default:
        return false;
    }
}

Bytes pad_message(ByteView encoded, std::size_t pad_to)
{
    if (encoded.size() + 1 > pad_to)
        throw PaddingError("message of " + std::to_string(encoded.size()) + " bytes does not fit pad length " +
                           std::to_string(pad_to));
    Bytes out(encoded.begin(), encoded.end());
    out.push_back(kPadMarker);
    out.resize(pad_to, 0);
    return out;
}

Bytes unpad_message(ByteView padded)
{
    auto last = std::find_if(padded.rbegin(), padded.rend(), [](std::uint8_t b) { return b != 0; });
    if (last == padded.rend() || *last != kPadMarker)
        throw PaddingError("padding marker missing");
    const auto len = static_cast<std::size_t>(padded.rend() - last) - 1;
    return Bytes(padded.begin(), padded.begin() + static_cast<std::ptrdiff_t>(len));
}

UniformEnvelope encrypt_uniform(const ProtocolMessage &msg, const crypto::X25519Public &hn_public,
                                RandomSource &rng, std::size_t pad_to)
{
    const Bytes padded = pad_message(encode_message(msg), pad_to);
    return UniformEnvelope{crypto::ecies_conceal(padded, hn_public, rng)};
}

ProtocolMessage decrypt_uniform(const UniformEnvelope &env, const crypto::X25519Secret &hn_secret)
{
    const Bytes padded = crypto::ecies_reveal(env.envelope, hn_secret);
    return decode_message(unpad_message(padded));
}

Auts build_auts_with_nonce(const UeState &ue, RandomSource &rng)
{
    const UeNonce rand_ue = rng.draw<kRandSize>();
    Auts auts;
    auts.conc = xor_bytes(ue.sqn_ue.bytes(), crypto::f5_star(ue.k, rand_ue));
    auts.mac_s = crypto::f1_star(ue.k, ue.sqn_ue.bytes(), rand_ue);
    auts.nonce_ue = rand_ue;
    return auts;
}

std::string_view to_string(RejectCause cause)
{
    switch (cause)
    {
    case RejectCause::MacFailure:
        return "mac-failure";
    case RejectCause::SynchFailure:
        return "synch-failure";
    case RejectCause::StaleNonce:
        return "stale-nonce";
    case RejectCause::NonceReuse:
        return "nonce-reuse";
    }
    return "unknown";
}

ProtocolMessage uniform_reject()
{
    static const UniformEnvelope kReject = make_reject();
    return kReject;
}

bool is_uniform_reject(const ProtocolMessage &msg)
{
    static const ProtocolMessage kReject = uniform_reject();
    return msg == kReject;
}

bool is_uniform_reject(ByteView frame)
{
    static const Bytes kFrame = encode_message(uniform_reject());
    return std::equal(frame.begin(), frame.end(), kFrame.begin(), kFrame.end());
}

} // namespace aka::variants
