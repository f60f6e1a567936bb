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

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aka/errors.hpp"
#include "aka/runner.hpp"

namespace aka::runner {

namespace {

using nlohmann::json;

json to_json(const TranscriptEvent &ev)
{
    json j;
    j["seq"] = ev.seq;
    j["direction"] = to_string(ev.direction);
    j["kind"] = to_string(ev.kind);
    j["tag"] = ev.tag;
    j["length"] = ev.length;
    j["frame"] = to_hex(ev.frame);
    j["summary"] = ev.summary;
    j["adversarial"] = ev.adversarial;
    j["ue"] = ev.ue ? json(*ev.ue) : json(nullptr);
    return j;
}

TranscriptEvent from_json(const json &j)
{
    TranscriptEvent ev;
    ev.seq = j.at("seq").get<std::size_t>();
    ev.direction = parse_direction(j.at("direction").get<std::string>());
    ev.kind = parse_event_kind(j.at("kind").get<std::string>());
    ev.tag = j.at("tag").get<std::uint8_t>();
    ev.length = j.at("length").get<std::size_t>();
    ev.frame = from_hex(j.at("frame").get<std::string>());
    ev.summary = j.at("summary").get<std::string>();
    ev.adversarial = j.at("adversarial").get<bool>();
    if (!j.at("ue").is_null())
        ev.ue = j.at("ue").get<std::size_t>();
    if (ev.frame.size() != ev.length)
        throw Error("frame hex has " + std::to_string(ev.frame.size()) + " bytes, length says " +
                    std::to_string(ev.length));
    return ev;
}

} // namespace

std::string to_jsonl(const std::vector<TranscriptEvent> &events)
{
    std::string out;
    for (const auto &ev : events)
        out += to_json(ev).dump() + "\n";
    return out;
}

std::vector<TranscriptEvent> from_jsonl(std::string_view text)
{
    std::vector<TranscriptEvent> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        if (line.empty())
            continue;
        try
        {
            out.push_back(from_json(json::parse(line)));
        }
        catch (const std::exception &e)
        {
            throw Error("transcript line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

void write_transcript(const std::vector<TranscriptEvent> &events, const std::filesystem::path &path)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot open " + path.string() + " for writing");
    out << to_jsonl(events);
    if (!out)
        throw Error("write failed for " + path.string());
}

std::vector<TranscriptEvent> read_transcript(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_jsonl(buf.str());
}

} // namespace aka::runner
