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

#include <gtest/gtest.h>

#include "aka/codec.hpp"
#include "aka/errors.hpp"
#include "aka/random.hpp"
#include "aka/variants.hpp"

using namespace aka;

namespace {

ProtocolMessage random_message(SeededRandom &rng)
{
    auto envelope = [&] {
        crypto::EciesEnvelope e;
        e.ephemeral_public = rng.draw<32>();
        e.ciphertext = rng.draw_bytes(rng.uniform(0, 300));
        e.tag = rng.draw<32>();
        return e;
    };
    switch (rng.uniform(0, 4))
    {
    case 0: {
        RegistrationRequest r;
        r.suci.mcc = "208";
        r.suci.mnc = rng.uniform(0, 1) != 0U ? "93" : "310";
        r.suci.envelope = envelope();
        return r;
    }
    case 1:
        return AuthenticationRequest{rng.draw<16>(), Autn{rng.draw<6>(), rng.draw<2>(), rng.draw<8>()}};
    case 2:
        return AuthenticationResponse{rng.draw<16>()};
    case 3: {
        AuthenticationFailure f;
        f.cause = rng.uniform(0, 1) != 0U ? FailureCause::MacFailure : FailureCause::SynchFailure;
        if (rng.uniform(0, 1) != 0U)
        {
            Auts a{rng.draw<6>(), rng.draw<8>(), std::nullopt};
            if (rng.uniform(0, 1) != 0U)
                a.nonce_ue = rng.draw<16>();
            f.auts = a;
        }
        return f;
    }
    default:
        return UniformEnvelope{envelope()};
    }
}

std::size_t decode_offset(const Bytes &frame)
{
    try
    {
        decode_message(frame);
    }
    catch (const DecodeError &e)
    {
        return e.offset();
    }
    ADD_FAILURE() << "frame decoded unexpectedly: " << to_hex(frame);
    return 0;
}

} // namespace

TEST(CodecTest, RoundTripProperty)
{
    SeededRandom rng(99);
    for (int i = 0; i < 2000; ++i)
    {
        const auto msg = random_message(rng);
        const Bytes frame = encode_message(msg);
        ASSERT_EQ(frame[0], message_tag(msg));
        ASSERT_EQ(decode_message(frame), msg);
        ASSERT_EQ(encode_message(decode_message(frame)), frame);
    }
}

TEST(CodecTest, FixedFrameSizes)
{
    EXPECT_EQ(encode_message(AuthenticationRequest{}).size(), 33U);
    EXPECT_EQ(kAuthenticationRequestFrameSize, 33U);
    EXPECT_EQ(encode_message(AuthenticationResponse{}).size(), 17U);
    EXPECT_EQ(encode_message(AuthenticationFailure{}).size(), kAuthenticationFailureFrameSize);
    EXPECT_EQ(kAuthenticationFailureFrameSize, 34U);
    EXPECT_EQ(envelope_frame_size(128), 195U);
    EXPECT_EQ(encode_message(variants::uniform_reject()).size(), 195U);
}

TEST(CodecTest, EveryTruncationIsRejected)
{
    SeededRandom rng(5);
    for (int i = 0; i < 200; ++i)
    {
        const Bytes frame = encode_message(random_message(rng));
        const std::size_t cut = rng.uniform(0, frame.size() - 1);
        const Bytes prefix(frame.begin(), frame.begin() + static_cast<std::ptrdiff_t>(cut));
        EXPECT_THROW(decode_message(prefix), DecodeError) << to_hex(frame) << " cut " << cut;
    }
}

TEST(CodecTest, TruncationReportsFrameEnd)
{
    Bytes frame = encode_message(AuthenticationRequest{});
    frame.resize(20);
    EXPECT_EQ(decode_offset(frame), 20U);
}

TEST(CodecTest, StrictDecoding)
{
    EXPECT_EQ(decode_offset(Bytes{}), 0U);
    EXPECT_EQ(decode_offset(Bytes{0x09}), 0U);

    Bytes trailing = encode_message(AuthenticationResponse{});
    trailing.push_back(0);
    EXPECT_EQ(decode_offset(trailing), 17U);

    Bytes bad_cause = encode_message(AuthenticationFailure{});
    bad_cause[1] = 3;
    EXPECT_EQ(decode_offset(bad_cause), 1U);

    Bytes bad_flag = encode_message(AuthenticationFailure{});
    bad_flag[2] = 2;
    EXPECT_EQ(decode_offset(bad_flag), 2U);

    Bytes filler = encode_message(AuthenticationFailure{});
    filler[5] = 1;
    EXPECT_THROW(decode_message(filler), DecodeError);

    AuthenticationFailure nonce_only;
    Bytes orphan = encode_message(nonce_only);
    orphan[17] = 1;
    EXPECT_THROW(decode_message(orphan), DecodeError);

    RegistrationRequest reg;
    reg.suci.mcc = "001";
    reg.suci.mnc = "01";
    Bytes bad_mcc = encode_message(reg);
    bad_mcc[1] = 'x';
    EXPECT_EQ(decode_offset(bad_mcc), 1U);
}

TEST(CodecTest, TwoDigitMncIsSpacePadded)
{
    RegistrationRequest reg;
    reg.suci.mcc = "001";
    reg.suci.mnc = "01";
    const Bytes frame = encode_message(reg);
    EXPECT_EQ(frame[4], '0');
    EXPECT_EQ(frame[5], '1');
    EXPECT_EQ(frame[6], ' ');
    EXPECT_EQ(std::get<RegistrationRequest>(decode_message(frame)).suci.mnc, "01");
}
