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

// Wire framing. Big-endian; one tag byte followed by fixed fields:
//
//   0x01 RegistrationRequest    mcc[3] mnc[3, space padded] eph_pub[32] ct_len:u16 ct tag[32]
//   0x02 AuthenticationRequest  rand[16] conc[6] amf[2] mac[8]
//   0x03 AuthenticationResponse res_star[16]
//   0x04 AuthenticationFailure  cause:u8 auts_present:u8 conc[6] mac_s[8] nonce_present:u8 nonce[16]
//   0x05 UniformEnvelope        eph_pub[32] ct_len:u16 ct tag[32]
//
// Absent optional fields are zero-filled and flagged 0. The decoder is strict:
// non-zero filler, unknown flags and trailing bytes are rejected, so
// decode(encode(m)) == m and encode(decode(b)) == b for every accepted b.

#include "aka/bytes.hpp"
#include "aka/messages.hpp"

namespace aka {

inline constexpr std::size_t kAuthenticationRequestFrameSize = 1 + kRandSize + kAkSize + kAmfSize + kMacSize;
inline constexpr std::size_t kAuthenticationResponseFrameSize = 1 + kResStarSize;
inline constexpr std::size_t kAuthenticationFailureFrameSize = 1 + 1 + 1 + kAkSize + kMacSize + 1 + kRandSize;

Bytes encode_message(const ProtocolMessage &msg);

/// Throws DecodeError carrying the offending offset.
ProtocolMessage decode_message(ByteView frame);

/// Size of an envelope frame (tag 0x05) for a ciphertext of `ct_len` bytes.
constexpr std::size_t envelope_frame_size(std::size_t ct_len)
{
    return 1 + kX25519Size + 2 + ct_len + crypto::kEciesTagSize;
}

} // namespace aka
