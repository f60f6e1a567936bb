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
#include <optional>
#include <string_view>
#include <vector>

#include "aka/crypto.hpp"
#include "aka/messages.hpp"
#include "aka/random.hpp"
#include "aka/state.hpp"
#include "aka/transcript.hpp"
#include "aka/variants.hpp"

namespace aka {

struct Challenge
{
    AuthenticationRequest request;
    AuthVector vector;
};

/// Result of processing a SUCI: either a challenge or, for a replayed UE
/// nonce, the uniform reject.
struct RegistrationReply
{
    std::optional<Challenge> challenge;
    std::optional<ProtocolMessage> reject;
};

/// Home network: subscriber database, vector generation, resynchronisation.
class Hn
{
  public:
    Hn(VariantMode mode, crypto::KeyPair keys, RandomSource &rng,
       std::size_t nonce_cache_capacity = variants::kDefaultNonceCacheCapacity);

    void add_subscriber(SubscriberRecord record);

    /// Reveals the SUCI and issues a vector. Throws IntegrityError,
    /// SubscriberNotFound or DecodeError (bad payload layout).
    RegistrationReply handle_registration(const RegistrationRequest &msg, std::string_view sn_name);

    /// Verifies MAC-S, overwrites SQN_HN with the reported SQN_UE and issues a
    /// fresh vector. Throws ResyncRejected.
    Challenge handle_auts(const SupiIdentity &supi, const Auts &auts, const Rand &rand, std::string_view sn_name);

    /// Opens a UE envelope (encrypted failure / response).
    ProtocolMessage open_envelope(const UniformEnvelope &env) const;

    /// Baseline vector for `record` at counter SQN_HN + 1; advances SQN_HN.
    Challenge issue_vector(SubscriberRecord &record, std::string_view sn_name);

    [[nodiscard]] const crypto::X25519Public &public_key() const
    {
        return m_keys.public_key;
    }
    [[nodiscard]] VariantMode mode() const
    {
        return m_mode;
    }

    SubscriberRecord &record(const SupiIdentity &supi);
    [[nodiscard]] const SubscriberRecord &record(const SupiIdentity &supi) const;

    [[nodiscard]] const variants::NonceCache &nonce_cache() const
    {
        return m_nonces;
    }

    /// Security events (nonce reuse) are appended here when set.
    void set_security_log(Transcript *log)
    {
        m_log = log;
    }

    [[nodiscard]] const std::vector<variants::RejectCause> &reject_log() const
    {
        return m_rejects;
    }

  private:
    SubscriberRecord &lookup(const std::string &mcc, const std::string &mnc, const Msin &msin);
    Challenge finish_vector(const SubscriberRecord &record, const Rand &rand, const Autn &autn,
                            std::string_view sn_name) const;

    VariantMode m_mode;
    crypto::KeyPair m_keys;
    RandomSource &m_rng;
    std::map<Msin, SubscriberRecord> m_records;
    variants::NonceCache m_nonces;
    Transcript *m_log = nullptr;
    std::vector<variants::RejectCause> m_rejects;
};

} // namespace aka
