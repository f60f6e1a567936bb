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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "aka/bytes.hpp"
#include "aka/crypto.hpp"
#include "aka/identity.hpp"

namespace aka {

/// AMF carried in every AUTN.
inline constexpr Amf kDefaultAmf{0x80, 0x00};

struct Suci
{
    std::string mcc;
    std::string mnc;
    crypto::EciesEnvelope envelope;

    bool operator==(const Suci &) const = default;
};

/// CONC || AMF || MAC, 16 bytes on the wire.
struct Autn
{
    Ak48 conc{};
    Amf amf = kDefaultAmf;
    Mac64 mac{};

    bool operator==(const Autn &) const = default;
};

/// Resynchronisation token. `nonce_ue` is carried only by the nonce-in-AUTS variant.
struct Auts
{
    Ak48 conc{};
    Mac64 mac_s{};
    std::optional<UeNonce> nonce_ue;

    bool operator==(const Auts &) const = default;
};

enum class FailureCause : std::uint8_t
{
    MacFailure = 1,
    SynchFailure = 2,
};

struct RegistrationRequest
{
    Suci suci;
    bool operator==(const RegistrationRequest &) const = default;
};

struct AuthenticationRequest
{
    Rand rand{};
    Autn autn;
    bool operator==(const AuthenticationRequest &) const = default;
};

struct AuthenticationResponse
{
    ResStar res_star{};
    bool operator==(const AuthenticationResponse &) const = default;
};

struct AuthenticationFailure
{
    FailureCause cause = FailureCause::MacFailure;
    std::optional<Auts> auts;
    bool operator==(const AuthenticationFailure &) const = default;
};

/// Encrypted, padded carrier used by the encrypted-failure, encrypted-response
/// and uniform-reject behaviours.
struct UniformEnvelope
{
    crypto::EciesEnvelope envelope;
    bool operator==(const UniformEnvelope &) const = default;
};

using ProtocolMessage = std::variant<RegistrationRequest, AuthenticationRequest, AuthenticationResponse,
                                     AuthenticationFailure, UniformEnvelope>;

namespace tag {
inline constexpr std::uint8_t kRegistrationRequest = 0x01;
inline constexpr std::uint8_t kAuthenticationRequest = 0x02;
inline constexpr std::uint8_t kAuthenticationResponse = 0x03;
inline constexpr std::uint8_t kAuthenticationFailure = 0x04;
inline constexpr std::uint8_t kUniformEnvelope = 0x05;
} // namespace tag

std::uint8_t message_tag(const ProtocolMessage &msg);
std::string_view message_name(std::uint8_t tag);

/// One-line human-readable rendering used in transcripts.
std::string describe(const ProtocolMessage &msg);

/// HN-generated challenge material held by the SN.
struct AuthVector
{
    Rand rand{};
    Autn autn;
    HxresStar hxres_star{};
    SupiIdentity supi;

    bool operator==(const AuthVector &) const = default;
};

enum class AuthOutcome
{
    Ok,
    MacFailure,
    SynchFailure,
    UniformReject,
    SnHashMismatch,
};

std::string_view to_string(AuthOutcome outcome);
/// Inverse of to_string; throws ArgumentError.
AuthOutcome parse_outcome(std::string_view text);

} // namespace aka
