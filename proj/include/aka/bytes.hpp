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

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aka {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

template <std::size_t N>
using FixedBytes = std::array<std::uint8_t, N>;

inline constexpr std::size_t kRandSize = 16;
inline constexpr std::size_t kSqnSize = 6;
inline constexpr std::size_t kAmfSize = 2;
inline constexpr std::size_t kMacSize = 8;
inline constexpr std::size_t kAkSize = 6;
inline constexpr std::size_t kResSize = 8;
inline constexpr std::size_t kResStarSize = 16;
inline constexpr std::size_t kHxresStarSize = 16;
inline constexpr std::size_t kKeySize = 16;
inline constexpr std::size_t kX25519Size = 32;

using Rand = FixedBytes<kRandSize>;
using Amf = FixedBytes<kAmfSize>;
using Mac64 = FixedBytes<kMacSize>;
using Ak48 = FixedBytes<kAkSize>;
using Res = FixedBytes<kResSize>;
using ResStar = FixedBytes<kResStarSize>;
using HxresStar = FixedBytes<kHxresStarSize>;
using UeNonce = FixedBytes<kRandSize>;

std::string to_hex(ByteView bytes);
Bytes from_hex(std::string_view hex);

template <std::size_t N>
FixedBytes<N> fixed_from_hex(std::string_view hex)
{
    FixedBytes<N> out{};
    const Bytes raw = from_hex(hex);
    if (raw.size() != N)
        throw std::invalid_argument("hex string has wrong length");
    std::copy(raw.begin(), raw.end(), out.begin());
    return out;
}

template <std::size_t N>
FixedBytes<N> xor_bytes(const FixedBytes<N> &a, const FixedBytes<N> &b)
{
    FixedBytes<N> out{};
    for (std::size_t i = 0; i < N; ++i)
        out[i] = a[i] ^ b[i];
    return out;
}

inline void append(Bytes &out, ByteView data)
{
    out.insert(out.end(), data.begin(), data.end());
}

/// 48-bit sequence counter. Arithmetic is unsigned; values above 2^48-1 are masked.
class Sqn
{
  public:
    static constexpr std::uint64_t kMask = (std::uint64_t{1} << 48) - 1;

    constexpr Sqn() = default;
    constexpr explicit Sqn(std::uint64_t value) : m_value(value & kMask)
    {
    }

    static Sqn from_bytes(ByteView bytes);

    [[nodiscard]] constexpr std::uint64_t value() const
    {
        return m_value;
    }
    [[nodiscard]] FixedBytes<kSqnSize> bytes() const;

    [[nodiscard]] constexpr Sqn next() const
    {
        return Sqn(m_value + 1);
    }

    constexpr auto operator<=>(const Sqn &) const = default;

  private:
    std::uint64_t m_value = 0;
};

} // namespace aka
