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

#include "aka/bytes.hpp"
#include "aka/crypto.hpp"
#include "aka/identity.hpp"
#include "aka/mode.hpp"

namespace aka {

inline constexpr std::uint32_t kDefaultWindow = 32;

/// HN-side view of one subscriber.
struct SubscriberRecord
{
    SupiIdentity supi;
    crypto::LongTermKey k;
    /// Last counter value placed in an issued vector.
    Sqn sqn_hn;
};

/// USIM-side credentials and counters.
struct UeState
{
    SupiIdentity supi;
    crypto::LongTermKey k;
    Sqn sqn_ue;
    std::uint32_t window_w = kDefaultWindow;
    VariantMode variant = VariantMode::Baseline;
    crypto::X25519Public hn_public{};
    /// RAND_UE of the outstanding registration (nonce-in-SUCI only).
    std::optional<UeNonce> pending_nonce;
};

} // namespace aka
