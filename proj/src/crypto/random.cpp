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

#include "aka/random.hpp"

#include <openssl/rand.h>

#include <limits>

#include "aka/errors.hpp"

namespace aka {

void SystemRandom::fill(std::span<std::uint8_t> out)
{
    if (out.empty())
        return;
    if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1)
        throw Error("RAND_bytes failed");
}

void SeededRandom::fill(std::span<std::uint8_t> out)
{
    std::size_t i = 0;
    while (i < out.size())
    {
        std::uint64_t word = m_engine();
        for (int j = 0; j < 8 && i < out.size(); ++j, ++i)
        {
            out[i] = static_cast<std::uint8_t>(word & 0xff);
            word >>= 8;
        }
    }
}

std::uint64_t SeededRandom::uniform(std::uint64_t lo, std::uint64_t hi)
{
    if (hi < lo)
        throw ArgumentError("uniform: empty range");
    const std::uint64_t span = hi - lo;
    if (span == std::numeric_limits<std::uint64_t>::max())
        return m_engine();
    // Rejection sampling keeps the stream identical across standard libraries,
    // unlike std::uniform_int_distribution.
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do
    {
        x = m_engine();
    } while (x >= limit);
    return lo + x % range;
}

} // namespace aka
