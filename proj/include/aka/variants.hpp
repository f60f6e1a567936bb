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

// Mitigation behaviour layered over the baseline state machines: SUCI payload
// layouts, counter re-basing, nonce-bound challenges, the HN nonce cache,
// padded failure/response envelopes and the uniform reject.

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>

#include "aka/bytes.hpp"
#include "aka/crypto.hpp"
#include "aka/messages.hpp"
#include "aka/random.hpp"
#include "aka/state.hpp"
#include "aka/transcript.hpp"

namespace aka::variants {

/// Canonical plaintext length of every uniform envelope.
inline constexpr std::size_t kUniformPadLength = 128;
inline constexpr std::uint8_t kPadMarker = 0x80;
inline constexpr std::size_t kDefaultNonceCacheCapacity = 1024;

/// MSIN (5) | MSIN || SQN_UE (11) | MSIN || RAND_UE (21), by mode.
/// For NonceInSuci the UE's pending_nonce must be set.
Bytes build_suci_payload(const UeState &ue);

struct SuciPayload
{
    Msin msin{};
    std::optional<Sqn> sqn_ue;
    std::optional<UeNonce> nonce;
};

/// Throws DecodeError when the length does not match the mode's layout.
SuciPayload parse_suci_payload(VariantMode mode, ByteView plaintext);

std::size_t suci_payload_size(VariantMode mode);

/// Re-bases the HN counter on the UE-reported one, so the next vector carries
/// reported + 1 whatever the HN counter was before. Returns the counter the
/// next vector will carry.
Sqn hn_sync_from_suci(SubscriberRecord &record, Sqn reported_sqn_ue);

/// Nonce-in-SUCI challenge: the f1 counter slot carries the first six bytes of
/// RAND_UE (masked by f5 in CONC) and the full nonce is folded into the MAC input.
Autn challenge_freshness_binding(const crypto::LongTermKey &k, const UeNonce &rand_ue, const Rand &rand);

/// UE-side check of challenge_freshness_binding against its own outstanding nonce.
bool freshness_binding_holds(const crypto::LongTermKey &k, const UeNonce &rand_ue, const Rand &rand,
                             const Autn &autn);

enum class NonceCheck
{
    Fresh,
    Replayed,
};

/// Per-subscriber set of recently seen UE nonces, oldest-first eviction.
class NonceCache
{
  public:
    explicit NonceCache(std::size_t capacity = kDefaultNonceCacheCapacity);

    /// Inserts and returns Fresh, or returns Replayed leaving the cache unchanged.
    NonceCheck check_and_insert(const SupiIdentity &supi, const UeNonce &nonce);
    [[nodiscard]] bool contains(const SupiIdentity &supi, const UeNonce &nonce) const;
    [[nodiscard]] std::size_t size(const SupiIdentity &supi) const;
    [[nodiscard]] std::size_t capacity() const
    {
        return m_capacity;
    }

  private:
    struct Entry
    {
        std::deque<UeNonce> order;
        std::set<UeNonce> members;
    };

    std::size_t m_capacity;
    std::map<SupiIdentity, Entry> m_entries;
};

/// Cache lookup that records a nonce-reuse event in `log` on a replay.
NonceCheck nonce_cache_check(NonceCache &cache, const SupiIdentity &supi, const UeNonce &rand_ue,
                             Transcript *log = nullptr);

/// True when `mode` sends `msg` inside a uniform envelope rather than in clear.
bool wraps_in_envelope(VariantMode mode, const ProtocolMessage &msg);

/// encode(msg) || 0x80 || zeros up to pad_to, ECIES-concealed to the HN.
/// Throws PaddingError when the encoded message does not fit.
UniformEnvelope encrypt_uniform(const ProtocolMessage &msg, const crypto::X25519Public &hn_public,
                                RandomSource &rng, std::size_t pad_to = kUniformPadLength);

/// Throws IntegrityError, PaddingError or DecodeError.
ProtocolMessage decrypt_uniform(const UniformEnvelope &env, const crypto::X25519Secret &hn_secret);

/// Pads `encoded` to `pad_to` with the 0x80 marker scheme.
Bytes pad_message(ByteView encoded, std::size_t pad_to);
/// Strips at the last 0x80 marker. Throws PaddingError.
Bytes unpad_message(ByteView padded);

/// Nonce-in-AUTS token: fresh RAND_UE, CONC = SQN_UE ^ f5*(K, RAND_UE),
/// MAC-S = f1*(K, SQN_UE, RAND_UE), nonce carried in clear.
Auts build_auts_with_nonce(const UeState &ue, RandomSource &rng);

enum class RejectCause
{
    MacFailure,
    SynchFailure,
    StaleNonce,
    NonceReuse,
};

std::string_view to_string(RejectCause cause);

/// The canonical reject frame. Identical bytes for every cause and subscriber;
/// causes are kept in the emitting actor's local log only.
ProtocolMessage uniform_reject();
bool is_uniform_reject(const ProtocolMessage &msg);
bool is_uniform_reject(ByteView frame);

} // namespace aka::variants
