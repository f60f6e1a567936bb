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

#include "aka/codec.hpp"

#include <algorithm>
#include <string>

#include "aka/errors.hpp"

namespace aka {

namespace {

class Writer
{
  public:
    void u8(std::uint8_t v)
    {
        m_out.push_back(v);
    }
    void u16(std::uint16_t v)
    {
        m_out.push_back(static_cast<std::uint8_t>(v >> 8));
        m_out.push_back(static_cast<std::uint8_t>(v & 0xff));
    }
    void raw(ByteView v)
    {
        append(m_out, v);
    }
    void zeros(std::size_t n)
    {
        m_out.insert(m_out.end(), n, 0);
    }
    void ascii(const std::string &s, std::size_t width)
    {
        if (s.size() > width)
            throw ArgumentError("field '" + s + "' wider than " + std::to_string(width));
        m_out.insert(m_out.end(), s.begin(), s.end());
        m_out.insert(m_out.end(), width - s.size(), ' ');
    }
    Bytes take()
    {
        return std::move(m_out);
    }

  private:
    Bytes m_out;
};

class Reader
{
  public:
    explicit Reader(ByteView data) : m_data(data)
    {
    }

    std::size_t offset() const
    {
        return m_pos;
    }

    std::uint8_t u8()
    {
        need(1);
        return m_data[m_pos++];
    }
    std::uint16_t u16()
    {
        need(2);
        auto v = static_cast<std::uint16_t>((m_data[m_pos] << 8) | m_data[m_pos + 1]);
        m_pos += 2;
        return v;
    }
    template <std::size_t N>
    FixedBytes<N> fixed()
    {
        need(N);
        FixedBytes<N> out{};
        std::copy_n(m_data.begin() + static_cast<std::ptrdiff_t>(m_pos), N, out.begin());
        m_pos += N;
        return out;
    }
    Bytes bytes(std::size_t n)
    {
        need(n);
        Bytes out(m_data.begin() + static_cast<std::ptrdiff_t>(m_pos),
                  m_data.begin() + static_cast<std::ptrdiff_t>(m_pos + n));
        m_pos += n;
        return out;
    }
    void zeros(std::size_t n, const char *what)
    {
        const std::size_t start = m_pos;
        Bytes b = bytes(n);
        auto it = std::find_if(b.begin(), b.end(), [](std::uint8_t x) { return x != 0; });
        if (it != b.end())
            throw DecodeError(std::string("non-zero filler in absent ") + what,
                              start + static_cast<std::size_t>(it - b.begin()));
    }
    std::uint8_t flag(const char *what)
    {
        const std::size_t at = m_pos;
        auto v = u8();
        if (v > 1)
            throw DecodeError(std::string("invalid ") + what + " flag", at);
        return v;
    }
    void finish()
    {
        if (m_pos != m_data.size())
            throw DecodeError("trailing bytes", m_pos);
    }

  private:
    void need(std::size_t n)
    {
        if (m_data.size() - m_pos < n)
            throw DecodeError("truncated frame", m_data.size());
    }

    ByteView m_data;
    std::size_t m_pos = 0;
};

void write_envelope(Writer &w, const crypto::EciesEnvelope &env)
{
    if (env.ciphertext.size() > 0xffff)
        throw ArgumentError("ciphertext too long for u16 length");
    w.raw(env.ephemeral_public);
    w.u16(static_cast<std::uint16_t>(env.ciphertext.size()));
    w.raw(env.ciphertext);
    w.raw(env.tag);
}

crypto::EciesEnvelope read_envelope(Reader &r)
{
    crypto::EciesEnvelope env;
    env.ephemeral_public = r.fixed<kX25519Size>();
    const std::uint16_t len = r.u16();
    env.ciphertext = r.bytes(len);
    env.tag = r.fixed<crypto::kEciesTagSize>();
    return env;
}

std::string read_plmn_field(Reader &r, bool is_mnc)
{
    const std::size_t at = r.offset();
    auto raw = r.fixed<3>();
    std::string s(raw.begin(), raw.end());
    if (is_mnc && s.back() == ' ')
        s.pop_back();
    if (is_mnc ? !is_valid_mnc(s) : !is_valid_mcc(s))
        throw DecodeError(is_mnc ? "invalid MNC" : "invalid MCC", at);
    return s;
}

} // namespace

Bytes encode_message(const ProtocolMessage &msg)
{
    Writer w;
    w.u8(message_tag(msg));
    if (auto *m = std::get_if<RegistrationRequest>(&msg))
    {
        if (!is_valid_mcc(m->suci.mcc) || !is_valid_mnc(m->suci.mnc))
            throw ArgumentError("SUCI carries an invalid MCC/MNC");
        w.ascii(m->suci.mcc, 3);
        w.ascii(m->suci.mnc, 3);
        write_envelope(w, m->suci.envelope);
    }
    else if (auto *m = std::get_if<AuthenticationRequest>(&msg))
    {
        w.raw(m->rand);
        w.raw(m->autn.conc);
        w.raw(m->autn.amf);
        w.raw(m->autn.mac);
    }
    else if (auto *m = std::get_if<AuthenticationResponse>(&msg))
    {
        w.raw(m->res_star);
    }
    else if (auto *m = std::get_if<AuthenticationFailure>(&msg))
    {
        w.u8(static_cast<std::uint8_t>(m->cause));
        if (m->auts)
        {
            w.u8(1);
            w.raw(m->auts->conc);
            w.raw(m->auts->mac_s);
        }
        else
        {
            w.u8(0);
            w.zeros(kAkSize + kMacSize);
        }
        if (m->auts && m->auts->nonce_ue)
        {
            w.u8(1);
            w.raw(*m->auts->nonce_ue);
        }
        else
        {
            w.u8(0);
            w.zeros(kRandSize);
        }
    }
    else if (auto *m = std::get_if<UniformEnvelope>(&msg))
    {
        write_envelope(w, m->envelope);
    }
    return w.take();
}

ProtocolMessage decode_message(ByteView frame)
{
    Reader r(frame);
    const std::uint8_t t = r.u8();
    ProtocolMessage out;
    switch (t)
    {
    case tag::kRegistrationRequest: {
        RegistrationRequest m;
        m.suci.mcc = read_plmn_field(r, false);
        m.suci.mnc = read_plmn_field(r, true);
        m.suci.envelope = read_envelope(r);
        out = std::move(m);
        break;
    }
    case tag::kAuthenticationRequest: {
        AuthenticationRequest m;
        m.rand = r.fixed<kRandSize>();
        m.autn.conc = r.fixed<kAkSize>();
        m.autn.amf = r.fixed<kAmfSize>();
        m.autn.mac = r.fixed<kMacSize>();
        out = m;
        break;
    }
    case tag::kAuthenticationResponse: {
        AuthenticationResponse m;
        m.res_star = r.fixed<kResStarSize>();
        out = m;
        break;
    }
    case tag::kAuthenticationFailure: {
        AuthenticationFailure m;
        const std::size_t cause_at = r.offset();
        const std::uint8_t cause = r.u8();
        if (cause != 1 && cause != 2)
            throw DecodeError("invalid failure cause", cause_at);
        m.cause = static_cast<FailureCause>(cause);
        const bool auts_present = r.flag("auts_present") != 0;
        if (auts_present)
        {
            Auts a;
            a.conc = r.fixed<kAkSize>();
            a.mac_s = r.fixed<kMacSize>();
            m.auts = a;
        }
        else
        {
            r.zeros(kAkSize + kMacSize, "AUTS");
        }
        const std::size_t nonce_at = r.offset();
        const bool nonce_present = r.flag("nonce_present") != 0;
        if (nonce_present)
        {
            if (!auts_present)
                throw DecodeError("nonce present without AUTS", nonce_at);
            m.auts->nonce_ue = r.fixed<kRandSize>();
        }
        else
        {
            r.zeros(kRandSize, "nonce");
        }
        out = m;
        break;
    }
    case tag::kUniformEnvelope: {
        UniformEnvelope m;
        m.envelope = read_envelope(r);
        out = std::move(m);
        break;
    }
    default:
        throw DecodeError("unknown message tag", 0);
    }
    r.finish();
    return out;
}

} // namespace aka
