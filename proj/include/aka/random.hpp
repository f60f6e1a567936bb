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
#include <random>
#include <span>

#include "aka/bytes.hpp"

namespace aka {

/// Source of fresh bytes for nonces and ephemeral keys.
class RandomSource
{
  public:
    virtual ~RandomSource() = default;
    virtual void fill(std::span<std::uint8_t> out) = 0;

    template <std::size_t N>
    FixedBytes<N> draw()
    {
        FixedBytes<N> out{};
        fill(out);
        return out;
    }

    Bytes draw_bytes(std::size_t n)
    {
        Bytes out(n);
        fill(out);
        return out;
    }
};

/// OS-backed CSPRNG.
class SystemRandom final : public RandomSource
{
  public:
    void fill(std::span<std::uint8_t> out) override;
};

/// Reproducible stream for simulation runs. Not suitable for real keys.
class SeededRandom final : public RandomSource
{
  public:
    explicit SeededRandom(std::uint64_t seed) : m_engine(seed)
    {
    }

    void fill(std::span<std::uint8_t> out) override;

    std::uint64_t next_u64()
    {
        return m_engine();
    }

    /// Uniform in [lo, hi].
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

  private:
    std::mt19937_64 m_engine;
};

} // namespace aka
