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

#include "aka/crypto.hpp"

#include <openssl/core_names.h>
#include <openssl/crypto.h>
#include <openssl/evp.h>
#include <openssl/hmac.h>
#include <openssl/kdf.h>
#include <openssl/params.h>
#include <openssl/sha.h>

#include <algorithm>
#include <memory>
#include <string>

#include "aka/errors.hpp"

namespace aka::crypto {

namespace {

struct PkeyDeleter
{
    void operator()(EVP_PKEY *p) const
    {
        EVP_PKEY_free(p);
    }
};
struct PkeyCtxDeleter
{
    void operator()(EVP_PKEY_CTX *p) const
    {
        EVP_PKEY_CTX_free(p);
    }
};
struct CipherCtxDeleter
{
    void operator()(EVP_CIPHER_CTX *p) const
    {
        EVP_CIPHER_CTX_free(p);
    }
};
struct KdfDeleter
{
    void operator()(EVP_KDF *p) const
    {
        EVP_KDF_free(p);
    }
};
struct KdfCtxDeleter
{
    void operator()(EVP_KDF_CTX *p) const
    {
        EVP_KDF_CTX_free(p);
    }
};

using PkeyPtr = std::unique_ptr<EVP_PKEY, PkeyDeleter>;
using PkeyCtxPtr = std::unique_ptr<EVP_PKEY_CTX, PkeyCtxDeleter>;

void require_width(ByteView v, std::size_t n, const char *what)
{
    if (v.size() != n)
        throw ArgumentError(std::string(what) + " must be " + std::to_string(n) + " bytes, got " +
                            std::to_string(v.size()));
}

FixedBytes<32> hmac_sha256(ByteView key, ByteView data)
{
    FixedBytes<32> out{};
    unsigned int len = 0;
    if (HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()), data.data(), data.size(), out.data(), &len) ==
            nullptr ||
        len != out.size())
        throw Error("HMAC-SHA-256 failed");
    return out;
}

/// HMAC-SHA-256 keyed by K over tag || parts..., truncated to N bytes.
template <std::size_t N, typename... Parts>
FixedBytes<N> keyed_prf(const LongTermKey &k, std::string_view tag, const Parts &...parts)
{
    static_assert(N <= 32);
    Bytes input(tag.begin(), tag.end());
    (append(input, ByteView(parts)), ...);
    const auto full = hmac_sha256(k.bytes(), input);
    FixedBytes<N> out{};
    std::copy_n(full.begin(), N, out.begin());
    return out;
}

X25519Public public_from_secret(const X25519Secret &secret)
{
    PkeyPtr key(EVP_PKEY_new_raw_private_key(EVP_PKEY_X25519, nullptr, secret.data(), secret.size()));
    if (!key)
        throw Error("X25519 key import failed");
    X25519Public pub{};
    std::size_t len = pub.size();
    if (EVP_PKEY_get_raw_public_key(key.get(), pub.data(), &len) != 1 || len != pub.size())
        throw Error("X25519 public key export failed");
    return pub;
}

Bytes aes128_ctr(ByteView key, ByteView data)
{
    std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter> ctx(EVP_CIPHER_CTX_new());
    const FixedBytes<16> iv{};
    if (!ctx || EVP_EncryptInit_ex(ctx.get(), EVP_aes_128_ctr(), nullptr, key.data(), iv.data()) != 1)
        throw Error("AES-128-CTR init failed");
    Bytes out(data.size());
    int len = 0;
    if (!data.empty() &&
        EVP_EncryptUpdate(ctx.get(), out.data(), &len, data.data(), static_cast<int>(data.size())) != 1)
        throw Error("AES-128-CTR failed");
    int tail = 0;
    if (EVP_EncryptFinal_ex(ctx.get(), out.data() + len, &tail) != 1)
        throw Error("AES-128-CTR final failed");
    return out;
}

struct EciesKeys
{
    Bytes enc_key;
    Bytes mac_key;
};

EciesKeys ecies_keys(const SharedSecret &z, const X25519Public &ephemeral_public)
{
    Bytes material = kdf_expand(z, ephemeral_public, kEciesEncKeySize + kEciesMacKeySize);
    EciesKeys keys;
    keys.enc_key.assign(material.begin(), material.begin() + kEciesEncKeySize);
    keys.mac_key.assign(material.begin() + kEciesEncKeySize, material.end());
    return keys;
}

} // namespace

LongTermKey LongTermKey::from_bytes(ByteView k)
{
    require_width(k, kKeySize, "long-term key");
    FixedBytes<kKeySize> arr{};
    std::copy(k.begin(), k.end(), arr.begin());
    return LongTermKey(arr);
}

KeyPair KeyPair::generate(RandomSource &rng)
{
    return from_secret(rng.draw<kX25519Size>());
}

KeyPair KeyPair::from_secret(const X25519Secret &secret)
{
    return KeyPair{secret, public_from_secret(secret)};
}

SharedSecret derive_shared_secret(ByteView my_secret, ByteView their_public)
{
    require_width(my_secret, kX25519Size, "X25519 scalar");
    require_width(their_public, kX25519Size, "X25519 point");

    PkeyPtr mine(EVP_PKEY_new_raw_private_key(EVP_PKEY_X25519, nullptr, my_secret.data(), my_secret.size()));
    PkeyPtr peer(EVP_PKEY_new_raw_public_key(EVP_PKEY_X25519, nullptr, their_public.data(), their_public.size()));
    if (!mine || !peer)
        throw Error("X25519 key import failed");

    PkeyCtxPtr ctx(EVP_PKEY_CTX_new(mine.get(), nullptr));
    if (!ctx || EVP_PKEY_derive_init(ctx.get()) != 1 || EVP_PKEY_derive_set_peer(ctx.get(), peer.get()) != 1)
        throw Error("X25519 derive setup failed");

    SharedSecret out;
    std::size_t len = out.z.size();
    // OpenSSL refuses to return an all-zero result; treat that refusal as degenerate too.
    if (EVP_PKEY_derive(ctx.get(), out.z.data(), &len) != 1 || len != out.z.size())
        throw DegenerateKeyError("X25519 produced a degenerate shared secret");
    if (std::all_of(out.z.begin(), out.z.end(), [](std::uint8_t b) { return b == 0; }))
        throw DegenerateKeyError("X25519 produced a degenerate shared secret");
    return out;
}

Bytes kdf_expand(const SharedSecret &z, ByteView shared_info, std::size_t out_len)
{
    if (out_len == 0 || out_len > kMaxKdfOutput)
        throw ArgumentError("kdf_expand: out_len must be in [1, 1024]");

    std::unique_ptr<EVP_KDF, KdfDeleter> kdf(EVP_KDF_fetch(nullptr, "X963KDF", nullptr));
    if (!kdf)
        throw Error("X963KDF unavailable");
    std::unique_ptr<EVP_KDF_CTX, KdfCtxDeleter> ctx(EVP_KDF_CTX_new(kdf.get()));
    if (!ctx)
        throw Error("X963KDF context allocation failed");

    char digest[] = "SHA256";
    FixedBytes<32> secret = z.z;
    Bytes info(shared_info.begin(), shared_info.end());
    OSSL_PARAM params[] = {
        OSSL_PARAM_construct_utf8_string(OSSL_KDF_PARAM_DIGEST, digest, 0),
        OSSL_PARAM_construct_octet_string(OSSL_KDF_PARAM_KEY, secret.data(), secret.size()),
        OSSL_PARAM_construct_octet_string(OSSL_KDF_PARAM_INFO, info.data(), info.size()),
        OSSL_PARAM_construct_end(),
    };
    Bytes out(out_len);
    if (EVP_KDF_derive(ctx.get(), out.data(), out.size(), params) != 1)
        throw Error("X963KDF derive failed");
    OPENSSL_cleanse(secret.data(), secret.size());
    return out;
}

EciesEnvelope ecies_conceal(ByteView plaintext, const X25519Public &recipient_public, RandomSource &rng)
{
    if (plaintext.size() > kMaxConcealPlaintext)
        throw ArgumentError("ecies_conceal: plaintext longer than 256 bytes");

    const KeyPair ephemeral = KeyPair::generate(rng);
    const SharedSecret z = derive_shared_secret(ephemeral.secret, recipient_public);
    const EciesKeys keys = ecies_keys(z, ephemeral.public_key);

    EciesEnvelope env;
    env.ephemeral_public = ephemeral.public_key;
    env.ciphertext = aes128_ctr(keys.enc_key, plaintext);
    env.tag = hmac_sha256(keys.mac_key, env.ciphertext);
    return env;
}

Bytes ecies_reveal(const EciesEnvelope &envelope, const X25519Secret &recipient_secret)
{
    const SharedSecret z = derive_shared_secret(recipient_secret, envelope.ephemeral_public);
    const EciesKeys keys = ecies_keys(z, envelope.ephemeral_public);
    const auto expected = hmac_sha256(keys.mac_key, envelope.ciphertext);
    if (!equal_ct(expected, envelope.tag))
        throw IntegrityError("ECIES tag mismatch");
    return aes128_ctr(keys.enc_key, envelope.ciphertext);
}

Mac64 f1(const LongTermKey &k, ByteView sqn, ByteView rand, ByteView amf, ByteView bound)
{
    require_width(sqn, kSqnSize, "f1 SQN");
    require_width(rand, kRandSize, "f1 RAND");
    require_width(amf, kAmfSize, "f1 AMF");
    return keyed_prf<kMacSize>(k, "f1", sqn, rand, amf, bound);
}

Res f2(const LongTermKey &k, ByteView rand)
{
    require_width(rand, kRandSize, "f2 RAND");
    return keyed_prf<kResSize>(k, "f2", rand);
}

Ak48 f5(const LongTermKey &k, ByteView rand)
{
    require_width(rand, kRandSize, "f5 RAND");
    return keyed_prf<kAkSize>(k, "f5", rand);
}

Mac64 f1_star(const LongTermKey &k, ByteView sqn, ByteView rand)
{
    require_width(sqn, kSqnSize, "f1* SQN");
    require_width(rand, kRandSize, "f1* RAND");
    return keyed_prf<kMacSize>(k, "f1s", sqn, rand);
}

Ak48 f5_star(const LongTermKey &k, ByteView rand)
{
    require_width(rand, kRandSize, "f5* RAND");
    return keyed_prf<kAkSize>(k, "f5s", rand);
}

ResStar derive_res_star(const LongTermKey &k, ByteView res, ByteView rand, std::string_view sn_name)
{
    require_width(res, kResSize, "RES");
    require_width(rand, kRandSize, "RAND");
    if (sn_name.empty())
        throw ArgumentError("serving network name must not be empty");
    ByteView name(reinterpret_cast<const std::uint8_t *>(sn_name.data()), sn_name.size());
    return keyed_prf<kResStarSize>(k, "res*", res, rand, name);
}

HxresStar hash_res_star(ByteView rand, ByteView res_star)
{
    require_width(rand, kRandSize, "RAND");
    require_width(res_star, kResStarSize, "RES*");
    Bytes input(rand.begin(), rand.end());
    append(input, res_star);
    FixedBytes<SHA256_DIGEST_LENGTH> digest{};
    SHA256(input.data(), input.size(), digest.data());
    HxresStar out{};
    std::copy_n(digest.begin(), out.size(), out.begin());
    return out;
}

bool equal_ct(ByteView a, ByteView b)
{
    if (a.size() != b.size())
        return false;
    return a.empty() || CRYPTO_memcmp(a.data(), b.data(), a.size()) == 0;
}

} // namespace aka::crypto
