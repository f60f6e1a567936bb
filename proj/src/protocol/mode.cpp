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

#include "aka/mode.hpp"

#include <string>

#include "aka/errors.hpp"

namespace aka {

std::string_view to_string(VariantMode mode)
{
    switch (mode)
    {
    case VariantMode::Baseline:
        return "baseline";
    case VariantMode::EncFailure:
        return "enc-failure";
    case VariantMode::EncResponse:
        return "enc-response";
    case VariantMode::SqnInSuci:
        return "sqn-in-suci";
    case VariantMode::NonceInSuci:
        return "nonce-in-suci";
    case VariantMode::NonceInAuts:
        return "nonce-in-auts";
    }
    return "unknown";
}

VariantMode parse_variant(std::string_view text)
{
    for (auto mode : kAllModes)
        if (to_string(mode) == text)
            return mode;
    throw ConfigError("unknown variant '" + std::string(text) + "'");
}

} // namespace aka
