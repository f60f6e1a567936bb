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

#include <string>
#include <string_view>

#include "aka/bytes.hpp"

namespace aka {

inline constexpr std::size_t kMsinSize = 5;
inline constexpr std::size_t kMsinDigits = 10;

/// 10 MSIN digits packed BCD, first digit in the high nibble.
using Msin = FixedBytes<kMsinSize>;

/// IMSI-form SUPI: MCC (3 digits), MNC (2-3 digits), MSIN (10 digits).
class SupiIdentity
{
  public:
    SupiIdentity() = default;

    /// Validates digit counts; throws ArgumentError.
    static SupiIdentity parse(std::string_view mcc, std::string_view mnc, std::string_view msin_digits);

    [[nodiscard]] const std::string &mcc() const
    {
        return m_mcc;
    }
    [[nodiscard]] const std::string &mnc() const
    {
        return m_mnc;
    }
    [[nodiscard]] const Msin &msin() const
    {
        return m_msin;
    }
    [[nodiscard]] std::string msin_digits() const;

    /// "imsi-<mcc><mnc><msin>"
    [[nodiscard]] std::string to_string() const;

    bool operator==(const SupiIdentity &) const = default;
    auto operator<=>(const SupiIdentity &) const = default;

  private:
    std::string m_mcc;
    std::string m_mnc;
    Msin m_msin{};
};

Msin pack_msin(std::string_view digits);
std::string unpack_msin(const Msin &msin);

bool is_valid_mcc(std::string_view mcc);
bool is_valid_mnc(std::string_view mnc);

} // namespace aka
