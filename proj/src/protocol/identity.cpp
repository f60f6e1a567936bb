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

#include "aka/identity.hpp"

#include <algorithm>

#include "aka/errors.hpp"

namespace aka {

namespace {

bool all_digits(std::string_view s)
{
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

} // namespace

bool is_valid_mcc(std::string_view mcc)
{
    return mcc.size() == 3 && all_digits(mcc);
}

bool is_valid_mnc(std::string_view mnc)
{
    return (mnc.size() == 2 || mnc.size() == 3) && all_digits(mnc);
}

Msin pack_msin(std::string_view digits)
{
    if (digits.size() != kMsinDigits || !all_digits(digits))
        throw ArgumentError("MSIN must be exactly 10 decimal digits");
    Msin out{};
    for (std::size_t i = 0; i < kMsinSize; ++i)
    {
        auto hi = static_cast<std::uint8_t>(digits[2 * i] - '0');
        auto lo = static_cast<std::uint8_t>(digits[2 * i + 1] - '0');
        out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return out;
}

std::string unpack_msin(const Msin &msin)
{
    std::string out;
    out.reserve(kMsinDigits);
    for (auto b : msin)
    {
        int hi = b >> 4;
        int lo = b & 0x0f;
        if (hi > 9 || lo > 9)
            throw ArgumentError("MSIN contains a non-BCD nibble");
        out.push_back(static_cast<char>('0' + hi));
        out.push_back(static_cast<char>('0' + lo));
    }
    return out;
}

SupiIdentity SupiIdentity::parse(std::string_view mcc, std::string_view mnc, std::string_view msin_digits)
{
    if (!is_valid_mcc(mcc))
        throw ArgumentError("MCC must be 3 digits");
    if (!is_valid_mnc(mnc))
        throw ArgumentError("MNC must be 2 or 3 digits");
    SupiIdentity id;
    id.m_mcc = std::string(mcc);
    id.m_mnc = std::string(mnc);
    id.m_msin = pack_msin(msin_digits);
    return id;
}

std::string SupiIdentity::msin_digits() const
{
    return unpack_msin(m_msin);
}

std::string SupiIdentity::to_string() const
{
    return "imsi-" + m_mcc + m_mnc + msin_digits();
}

} // namespace aka
