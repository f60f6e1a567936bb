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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aka {

class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class ArgumentError : public Error
{
  public:
    using Error::Error;
};

/// X25519 produced the all-zero output (low-order peer point).
class DegenerateKeyError : public Error
{
  public:
    using Error::Error;
};

/// Authentication tag did not verify; no plaintext is released.
class IntegrityError : public Error
{
  public:
    using Error::Error;
};

class PaddingError : public Error
{
  public:
    using Error::Error;
};

class DecodeError : public Error
{
  public:
    DecodeError(const std::string &what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), m_offset(offset)
    {
    }

    [[nodiscard]] std::size_t offset() const
    {
        return m_offset;
    }

  private:
    std::size_t m_offset;
};

class SubscriberNotFound : public Error
{
  public:
    using Error::Error;
};

class ResyncRejected : public Error
{
  public:
    using Error::Error;
};

class UnknownSession : public Error
{
  public:
    using Error::Error;
};

class CaptureTimeout : public Error
{
  public:
    using Error::Error;
};

class AttackFailed : public Error
{
  public:
    using Error::Error;
};

class ConfigError : public Error
{
  public:
    using Error::Error;
};

} // namespace aka
