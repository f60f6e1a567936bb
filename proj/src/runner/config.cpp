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

#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "aka/errors.hpp"
#include "aka/runner.hpp"

namespace aka::runner {

namespace {

constexpr std::size_t kMaxSubscribers = 100'000;
constexpr std::size_t kMaxGap = 100'000;

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

/// Drops a trailing comment, leaving '#' inside a quoted string alone.
std::string_view strip_comment(std::string_view line)
{
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i)
    {
        if (line[i] == '"')
            quoted = !quoted;
        else if (line[i] == '#' && !quoted)
            return line.substr(0, i);
    }
    return line;
}

struct Value
{
    std::string text;
    bool is_string = false;
    std::size_t line = 0;
};

std::string where(std::size_t line)
{
    return "config line " + std::to_string(line) + ": ";
}

std::string as_string(const std::string &key, const Value &v)
{
    if (!v.is_string)
        throw ConfigError(where(v.line) + key + " must be a quoted string");
    return v.text;
}

std::uint64_t as_uint(const std::string &key, const Value &v)
{
    if (v.is_string)
        throw ConfigError(where(v.line) + key + " must be an integer");
    std::string digits;
    for (char c : v.text)
        if (c != '_')
            digits.push_back(c);
    std::uint64_t out = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
    if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size())
        throw ConfigError(where(v.line) + key + " is not a non-negative integer: " + v.text);
    return out;
}

std::map<std::string, Value> parse_flat_toml(std::string_view text)
{
    std::map<std::string, Value> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw))
    {
        ++lineno;
        const auto line = trim(strip_comment(raw));
        if (line.empty())
            continue;
        if (line.front() == '[')
            throw ConfigError(where(lineno) + "tables are not supported");
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(where(lineno) + "expected key = value");
        const std::string key(trim(line.substr(0, eq)));
        const auto rhs = trim(line.substr(eq + 1));
        if (key.empty() || rhs.empty())
            throw ConfigError(where(lineno) + "expected key = value");

        Value v;
        v.line = lineno;
        if (rhs.front() == '"')
        {
            if (rhs.size() < 2 || rhs.back() != '"')
                throw ConfigError(where(lineno) + "unterminated string");
            v.text = std::string(rhs.substr(1, rhs.size() - 2));
            if (v.text.find_first_of("\"\\") != std::string::npos)
                throw ConfigError(where(lineno) + "escapes are not supported");
            v.is_string = true;
        }
        else
        {
            v.text = std::string(rhs);
        }
        if (!out.emplace(key, std::move(v)).second)
            throw ConfigError(where(lineno) + "duplicate key " + key);
    }
    return out;
}

} // namespace

std::string_view to_string(ScenarioId id)
{
    switch (id)
    {
    case ScenarioId::Normal:
        return "normal";
    case ScenarioId::ReplayAuthSame:
        return "replay-auth-same";
    case ScenarioId::ReplayAuthDiff:
        return "replay-auth-diff";
    case ScenarioId::ReplaySuciSame:
        return "replay-suci-same";
    case ScenarioId::ReplaySuciDiff:
        return "replay-suci-diff";
    case ScenarioId::AutsAttack:
        return "auts-attack";
    }
    return "unknown";
}

ScenarioId parse_scenario(std::string_view text)
{
    for (auto id : {ScenarioId::Normal, ScenarioId::ReplayAuthSame, ScenarioId::ReplayAuthDiff,
                    ScenarioId::ReplaySuciSame, ScenarioId::ReplaySuciDiff, ScenarioId::AutsAttack})
        if (to_string(id) == text)
            return id;
    throw ConfigError("unknown scenario id: " + std::string(text));
}

void ScenarioConfig::validate() const
{
    if (window == 0)
        throw ConfigError("window must be at least 1");
    if (subscribers == 0 || subscribers > kMaxSubscribers)
        throw ConfigError("subscribers must be in [1, " + std::to_string(kMaxSubscribers) + "]");
    if ((scenario == ScenarioId::ReplayAuthDiff || scenario == ScenarioId::ReplaySuciDiff) && subscribers < 2)
        throw ConfigError(std::string(to_string(scenario)) + " needs at least 2 subscribers");
    if (suci_gap > kMaxGap || auts_gap > kMaxGap)
        throw ConfigError("gap counts must not exceed " + std::to_string(kMaxGap));
}

std::string ScenarioConfig::to_toml() const
{
    std::ostringstream out;
    out << "variant = \"" << to_string(variant) << "\"\n"
        << "scenario = \"" << to_string(scenario) << "\"\n"
        << "seed = " << seed << "\n"
        << "window = " << window << "\n"
        << "subscribers = " << subscribers << "\n"
        << "suci-gap = " << suci_gap << "\n"
        << "auts-gap = " << auts_gap << "\n";
    return out.str();
}

ScenarioConfig ScenarioConfig::from_toml(std::string_view text)
{
    ScenarioConfig cfg;
    for (const auto &[key, value] : parse_flat_toml(text))
    {
        if (key == "variant")
            cfg.variant = parse_variant(as_string(key, value));
        else if (key == "scenario")
            cfg.scenario = parse_scenario(as_string(key, value));
        else if (key == "seed")
            cfg.seed = as_uint(key, value);
        else if (key == "window")
        {
            const auto w = as_uint(key, value);
            if (w > std::numeric_limits<std::uint32_t>::max())
                throw ConfigError(where(value.line) + "window out of range");
            cfg.window = static_cast<std::uint32_t>(w);
        }
        else if (key == "subscribers")
            cfg.subscribers = as_uint(key, value);
        else if (key == "suci-gap")
            cfg.suci_gap = as_uint(key, value);
        else if (key == "auts-gap")
            cfg.auts_gap = as_uint(key, value);
        else
            throw ConfigError(where(value.line) + "unknown key " + key);
    }
    cfg.validate();
    return cfg;
}

ScenarioConfig ScenarioConfig::load(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_toml(buf.str());
}

} // namespace aka::runner
