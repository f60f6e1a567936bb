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

#include "aka/world.hpp"

#include <cstdio>
#include <set>

#include "aka/codec.hpp"
#include "aka/errors.hpp"

namespace aka::adversary {

namespace {

constexpr std::uint64_t kMaxMsin = 9'999'999'999ULL;

std::string msin_digits(std::uint64_t v)
{
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%010llu", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace

World::World(const WorldConfig &config) : m_config(config), m_rng(std::make_unique<SeededRandom>(config.seed))
{
    if (config.subscribers == 0)
        throw ArgumentError("world needs at least one subscriber");
    if (config.window == 0)
        throw ArgumentError("acceptance window must be at least 1");

    if (config.interpose_tap)
    {
        auto tap = std::make_unique<ChannelTap>();
        m_tap = tap.get();
        m_link = std::move(tap);
    }
    else
    {
        m_link = std::make_unique<PlainLink>();
    }

    m_hn = std::make_unique<Hn>(config.mode, crypto::KeyPair::generate(*m_rng), *m_rng, config.nonce_cache_capacity);
    m_hn->set_security_log(&m_transcript);
    m_sn = std::make_unique<Sn>(config.sn_name, *m_rng);

    std::set<std::uint64_t> used;
    for (std::size_t i = 0; i < config.subscribers; ++i)
    {
        std::uint64_t msin;
        do
        {
            msin = m_rng->uniform(0, kMaxMsin);
        } while (!used.insert(msin).second);

        const auto supi = SupiIdentity::parse(config.mcc, config.mnc, msin_digits(msin));
        const auto k = crypto::LongTermKey(m_rng->draw<kKeySize>());
        m_hn->add_subscriber(SubscriberRecord{supi, k, config.initial_sqn});

        UeState st;
        st.supi = supi;
        st.k = k;
        st.sqn_ue = config.initial_sqn;
        st.window_w = config.window;
        st.variant = config.mode;
        st.hn_public = m_hn->public_key();
        m_ues.push_back(std::make_unique<Ue>(std::move(st), *m_rng));
    }
}

Ue &World::ue(std::size_t i)
{
    if (i >= m_ues.size())
        throw ArgumentError("no UE with index " + std::to_string(i));
    return *m_ues[i];
}

ChannelTap &World::tap()
{
    if (m_tap == nullptr)
        throw Error("world was built without a channel tap");
    return *m_tap;
}

std::size_t World::radio_frames_since(std::size_t first_event) const
{
    std::size_t n = 0;
    const auto &evs = m_transcript.events();
    for (std::size_t i = first_event; i < evs.size(); ++i)
        if (evs[i].kind == EventKind::Frame &&
            (evs[i].direction == Direction::UeToSn || evs[i].direction == Direction::SnToUe))
            ++n;
    return n;
}

std::optional<Bytes> World::ue_receive(std::size_t i, const Bytes &frame)
{
    ProtocolMessage msg;
    try
    {
        msg = decode_message(frame);
    }
    catch (const DecodeError &)
    {
        return std::nullopt;
    }
    auto reply = ue(i).receive(msg, m_config.sn_name);
    if (!reply)
        return std::nullopt;
    return encode_message(*reply);
}

World::Pending World::network_handle_registration(const Bytes &frame, std::optional<std::size_t> ue,
                                                   bool adversarial)
{
    ProtocolMessage msg;
    try
    {
        msg = decode_message(frame);
    }
    catch (const DecodeError &e)
    {
        m_transcript.note(std::string("sn dropped undecodable frame: ") + e.what(), ue);
        return {};
    }
    const auto *req = std::get_if<RegistrationRequest>(&msg);
    if (req == nullptr)
    {
        m_transcript.note("sn dropped unexpected " + std::string(message_name(message_tag(msg))), ue);
        return {};
    }

    m_transcript.frame(Direction::SnToHn, frame, ue, adversarial);
    RegistrationReply reply;
    try
    {
        reply = m_hn->handle_registration(*req, m_config.sn_name);
    }
    catch (const Error &e)
    {
        m_transcript.note(std::string("hn rejected registration: ") + e.what(), ue);
        return {};
    }

    if (reply.reject)
    {
        Bytes f = encode_message(*reply.reject);
        m_transcript.frame(Direction::HnToSn, f, ue);
        return Pending{std::nullopt, std::move(f)};
    }

    HeldSession held = m_sn->forward_and_hold(reply.challenge->vector);
    m_transcript.frame(Direction::HnToSn, encode_message(reply.challenge->request), ue, false,
                       "hxres*=" + to_hex(reply.challenge->vector.hxres_star));
    Bytes down = encode_message(held.request);
    return Pending{std::move(held), std::move(down)};
}

std::optional<Bytes> World::network_registration(const Bytes &frame, bool adversarial)
{
    m_transcript.frame(Direction::UeToSn, frame, std::nullopt, adversarial, adversarial ? "injected" : "");
    Pending p = network_handle_registration(frame, std::nullopt, adversarial);
    if (p.downlink)
        m_transcript.frame(Direction::SnToUe, *p.downlink, std::nullopt, false, "absorbed by adversary");
    return p.downlink;
}

RegistrationRun World::register_ue(std::size_t i, bool follow_resync)
{
    RegistrationRun run;
    run.first_event = m_transcript.size();

    const Bytes frame = encode_message(ue(i).build_registration());
    auto delivered = m_link->uplink(i, frame, m_transcript);
    if (!delivered)
        return run;

    Pending p = network_handle_registration(*delivered, i, false);
    if (p.held)
    {
        run.outcomes = deliver_challenge(i, *p.held, follow_resync ? 1 : 0);
    }
    else if (p.downlink)
    {
        auto d = m_link->downlink(i, *p.downlink, m_transcript);
        if (d)
            ue_receive(i, *d);
        m_transcript.verdict(AuthOutcome::UniformReject, i);
        run.outcomes.push_back(AuthOutcome::UniformReject);
    }
    return run;
}

std::vector<AuthOutcome> World::deliver_challenge(std::size_t i, const HeldSession &held, int resync_budget)
{
    auto d = m_link->downlink(i, encode_message(held.request), m_transcript);
    if (!d)
        return {};
    auto reply = ue_receive(i, *d);
    if (!reply)
        return {};
    auto up = m_link->uplink(i, *reply, m_transcript);
    if (!up)
        return {};
    return serve_reply(i, held.handle, *up, resync_budget);
}

std::vector<AuthOutcome> World::serve_reply(std::size_t i, const SessionHandle &session, const Bytes &frame,
                                            int resync_budget)
{
    ProtocolMessage msg;
    try
    {
        msg = decode_message(frame);
    }
    catch (const DecodeError &e)
    {
        m_transcript.note(std::string("sn dropped undecodable reply: ") + e.what(), i);
        return {};
    }

    if (const auto *env = std::get_if<UniformEnvelope>(&msg))
    {
        if (variants::is_uniform_reject(msg))
        {
            m_transcript.verdict(AuthOutcome::UniformReject, i);
            return {AuthOutcome::UniformReject};
        }
        // The SN cannot open UE envelopes; the HN decrypts and hands back the inner message.
        m_transcript.frame(Direction::SnToHn, frame, i);
        ProtocolMessage inner;
        try
        {
            inner = m_hn->open_envelope(*env);
        }
        catch (const Error &e)
        {
            m_transcript.note(std::string("hn could not open envelope: ") + e.what(), i);
            return {};
        }
        m_transcript.frame(Direction::HnToSn, encode_message(inner), i, false, "decrypted");
        msg = std::move(inner);
    }

    if (const auto *resp = std::get_if<AuthenticationResponse>(&msg))
    {
        const AuthOutcome o = m_sn->verify_response(session, *resp);
        m_transcript.verdict(o, i);
        return {o};
    }
    if (const auto *failure = std::get_if<AuthenticationFailure>(&msg))
        return serve_failure(i, session, *failure, resync_budget);

    m_transcript.note("sn ignored unexpected " + std::string(message_name(message_tag(msg))), i);
    return {};
}

std::vector<AuthOutcome> World::serve_failure(std::size_t i, const SessionHandle &session,
                                              const AuthenticationFailure &failure, int resync_budget)
{
    const AuthOutcome o =
        failure.cause == FailureCause::MacFailure ? AuthOutcome::MacFailure : AuthOutcome::SynchFailure;
    m_transcript.verdict(o, i);
    std::vector<AuthOutcome> out{o};

    if (failure.cause != FailureCause::SynchFailure || !failure.auts || resync_budget <= 0)
        return out;

    const AuthVector vector = m_sn->session(session);
    m_transcript.frame(Direction::SnToHn, encode_message(failure), i, false, "resync");
    Challenge fresh;
    try
    {
        fresh = m_hn->handle_auts(vector.supi, *failure.auts, vector.rand, m_config.sn_name);
    }
    catch (const Error &e)
    {
        m_transcript.note(std::string("hn resync rejected: ") + e.what(), i);
        return out;
    }
    HeldSession held = m_sn->forward_and_hold(fresh.vector);
    m_transcript.frame(Direction::HnToSn, encode_message(fresh.request), i, false,
                       "hxres*=" + to_hex(fresh.vector.hxres_star));
    auto rest = deliver_challenge(i, held, resync_budget - 1);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

} // namespace aka::adversary
