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

// Primitives shared by the UE and the home network: ECIES Profile A identity
// concealment over X25519, and the keyed function family used to build and
// check authentication vectors.
//
// f1/f2/f5/f1*/f5* and the RES* derivation are HMAC-SHA-256 keyed by K over
// an ASCII domain tag followed by the concatenated inputs, truncated to the
// output width. They are stand-ins for MILENAGE; only the keyed-PRF property
// matters for the protocol behaviour modelled here.

#include <cstddef>
#include <string_view>

#include "aka/bytes.hpp"
#include "aka/random.hpp"

namespace aka::crypto {

using X25519Secret = FixedBytes<kX25519Size>;
using X25519Public = FixedBytes<kX25519Size>;

inline constexpr std::size_t kEciesEncKeySize = 16;
inline constexpr std::size_t kEciesMacKeySize = 32;
inline constexpr std::size_t kEciesTagSize = 32;
inline constexpr std::size_t kMaxConcealPlaintext = 256;
inline constexpr std::size_t kMaxKdfOutput = 1024;

/// Subscriber long-term secret K. Always 16 bytes.
class LongTermKey
{
  public:
    LongTermKey() = default;
    explicit LongTermKey(const FixedBytes<kKeySize> &k) : m_k(k)
    {
    }
    /// Throws ArgumentError unless `k` is exactly 16 bytes.
    static LongTermKey from_bytes(ByteView k);

    [[nodiscard]] const FixedBytes<kKeySize> &bytes() const
    {
        return m_k;
    }

    bool operator==(const LongTermKey &) const = default;

  private:
    FixedBytes<kKeySize> m_k{};
};

struct KeyPair
{
    X25519Secret secret{};
    X25519Public public_key{};

    static KeyPair generate(RandomSource &rng);
    static KeyPair from_secret(const X25519Secret &secret);
};

struct SharedSecret
{
    FixedBytes<32> z{};
};

struct EciesEnvelope
{
    X25519Public ephemeral_public{};
    Bytes ciphertext;
    FixedBytes<kEciesTagSize> tag{};

    bool operator==(const EciesEnvelope &) const = default;
};

/// X25519(my_secret, their_public). Throws DegenerateKeyError on an all-zero result.
SharedSecret derive_shared_secret(ByteView my_secret, ByteView their_public);

/// ANSI X9.63 KDF with SHA-256. `out_len` must be in [1, 1024].
Bytes kdf_expand(const SharedSecret &z, ByteView shared_info, std::size_t out_len);

/// Conceals `plaintext` (at most 256 bytes) under a fresh ephemeral key.
EciesEnvelope ecies_conceal(ByteView plaintext, const X25519Public &recipient_public, RandomSource &rng);

/// Verifies the tag, then decrypts. Throws IntegrityError on any mismatch.
Bytes ecies_reveal(const EciesEnvelope &envelope, const X25519Secret &recipient_secret);

// Keyed function family. Inputs are width-checked; a wrong width throws ArgumentError.
//
// `bound` lets a caller fold extra freshness material into the f1 input; with
// an empty span the result is plain f1.
Mac64 f1(const LongTermKey &k, ByteView sqn, ByteView rand, ByteView amf, ByteView bound = {});
Res f2(const LongTermKey &k, ByteView rand);
Ak48 f5(const LongTermKey &k, ByteView rand);
Mac64 f1_star(const LongTermKey &k, ByteView sqn, ByteView rand);
Ak48 f5_star(const LongTermKey &k, ByteView rand);

/// RES* bound to RES, RAND and the serving network name (non-empty).
ResStar derive_res_star(const LongTermKey &k, ByteView res, ByteView rand, std::string_view sn_name);

/// Leftmost 16 bytes of SHA-256(RAND || RES*).
HxresStar hash_res_star(ByteView rand, ByteView res_star);

/// Constant-time comparison.
bool equal_ct(ByteView a, ByteView b);

} // namespace aka::crypto
