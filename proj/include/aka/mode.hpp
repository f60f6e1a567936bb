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

#include <array>
#include <string_view>

namespace aka {

/// Protocol configuration. UE and HN must run the same mode.
enum class VariantMode
{
    Baseline,
    /// Authentication Failure sent inside a padded ECIES envelope.
    EncFailure,
    /// Both Authentication Failure and Authentication Response enveloped.
    EncResponse,
    /// SUCI conceals MSIN || SQN_UE; the HN re-bases its counter from it.
    SqnInSuci,
    /// SUCI conceals MSIN || RAND_UE; the challenge is bound to RAND_UE and SQN is unused.
    NonceInSuci,
    /// AUTS masked with a key derived from a fresh RAND_UE carried in the AUTS.
    NonceInAuts,
};

inline constexpr std::array kAllModes{
    VariantMode::Baseline,    VariantMode::EncFailure,  VariantMode::EncResponse,
    VariantMode::SqnInSuci,   VariantMode::NonceInSuci, VariantMode::NonceInAuts,
};

/// baseline | enc-failure | enc-response | sqn-in-suci | nonce-in-suci | nonce-in-auts
std::string_view to_string(VariantMode mode);
/// Throws ConfigError on an unknown name.
VariantMode parse_variant(std::string_view text);

} // namespace aka
