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

#include <set>

#include "aka/codec.hpp"
#include "aka/errors.hpp"
#include "aka/hn.hpp"
#include "aka/sn.hpp"
#include "aka/ue.hpp"

using namespace aka;

namespace {

constexpr std::string_view kSnName = "5G:mnc001.mcc001.3gppnetwork.org";

/// One UE, SN and HN wired by hand, without a radio link.
struct Rig
{
    explicit Rig(VariantMode mode, std::uint64_t seed = 1)
        : rng(seed), hn(mode, crypto::KeyPair::generate(rng), rng), sn(std::string(kSnName), rng)
    {
        supi = SupiIdentity::parse("001", "01", "0123456789");
        k = crypto::LongTermKey(rng.draw<kKeySize>());
        hn.add_subscriber(SubscriberRecord{supi, k, Sqn{}});
        UeState st;
        st.supi = supi;
        st.k = k;
        st.variant = mode;
        st.hn_public = hn.public_key();
        ue = std::make_unique<Ue>(st, rng);
    }

    Challenge challenge()
    {
        auto reply = hn.handle_registration(ue->build_registration(), kSnName);
        EXPECT_TRUE(reply.challenge.has_value());
        return *reply.challenge;
    }

    ProtocolMessage answer(const AuthenticationRequest &req)
    {
        return ue->handle_auth_request(req, kSnName);
    }

    SeededRandom rng;
    Hn hn;
    Sn sn;
    SupiIdentity supi;
    crypto::LongTermKey k;
    std::unique_ptr<Ue> ue;
};

const AuthenticationFailure &as_failure(const ProtocolMessage &m)
{
    return std::get<AuthenticationFailure>(m);
}

} // namespace

TEST(IdentityTest, ParseAndFormat)
{
    const auto supi = SupiIdentity::parse("208", "93", "0000000001");
    EXPECT_EQ(supi.to_string(), "imsi-208930000000001");
    EXPECT_EQ(supi.msin_digits(), "0000000001");
    EXPECT_EQ(unpack_msin(pack_msin("9876543210")), "9876543210");
    EXPECT_THROW(SupiIdentity::parse("20", "93", "0000000001"), ArgumentError);
    EXPECT_THROW(SupiIdentity::parse("208", "9", "0000000001"), ArgumentError);
    EXPECT_THROW(SupiIdentity::parse("208", "93", "00000001"), ArgumentError);
    EXPECT_THROW(SupiIdentity::parse("208", "93", "00000000a1"), ArgumentError);
}

TEST(WindowTest, FrozenAcceptanceSet)
{
    // Brute-force oracle for SQN_UE = 10, W = 32.
    std::set<std::uint64_t> accepted;
    for (std::uint64_t p = 0; p < 100; ++p)
        if (window_check(Sqn(10), Sqn(p), 32))
            accepted.insert(p);
    std::set<std::uint64_t> expected;
    for (std::uint64_t p = 11; p <= 42; ++p)
        expected.insert(p);
    EXPECT_EQ(accepted, expected);
}

TEST(WindowTest, EdgesAndZeroWindow)
{
    EXPECT_FALSE(window_check(Sqn(5), Sqn(5), 1));
    EXPECT_TRUE(window_check(Sqn(5), Sqn(6), 1));
    EXPECT_FALSE(window_check(Sqn(5), Sqn(7), 1));
    EXPECT_FALSE(window_check(Sqn(5), Sqn(4), 32));
    EXPECT_THROW(window_check(Sqn(5), Sqn(6), 0), ArgumentError);
}

TEST(BaselineTest, HonestRunAdvancesBothCounters)
{
    Rig r(VariantMode::Baseline);
    const auto c = r.challenge();
    const auto held = r.sn.forward_and_hold(c.vector);
    EXPECT_EQ(held.request, c.request);
    const auto reply = r.answer(held.request);
    ASSERT_TRUE(std::holds_alternative<AuthenticationResponse>(reply));
    EXPECT_EQ(r.sn.verify_response(held.handle, std::get<AuthenticationResponse>(reply)), AuthOutcome::Ok);
    EXPECT_EQ(r.ue->state().sqn_ue.value(), 1U);
    EXPECT_EQ(r.hn.record(r.supi).sqn_hn.value(), 1U);
}

TEST(BaselineTest, ReplayedChallengeGivesSynchFailureAndResyncRecovers)
{
    Rig r(VariantMode::Baseline);
    const auto c = r.challenge();
    r.answer(c.request);
    const auto replay = r.answer(c.request);
    const auto &failure = as_failure(replay);
    EXPECT_EQ(failure.cause, FailureCause::SynchFailure);
    ASSERT_TRUE(failure.auts.has_value());
    EXPECT_FALSE(failure.auts->nonce_ue.has_value());

    r.hn.record(r.supi).sqn_hn = Sqn(500);
    const auto fresh = r.hn.handle_auts(r.supi, *failure.auts, c.request.rand, kSnName);
    EXPECT_EQ(r.hn.record(r.supi).sqn_hn.value(), 2U);
    EXPECT_TRUE(std::holds_alternative<AuthenticationResponse>(r.answer(fresh.request)));
}

TEST(BaselineTest, ForeignChallengeGivesMacFailure)
{
    Rig a(VariantMode::Baseline, 1);
    Rig b(VariantMode::Baseline, 2);
    const auto c = a.challenge();
    const auto &failure = as_failure(b.answer(c.request));
    EXPECT_EQ(failure.cause, FailureCause::MacFailure);
    EXPECT_FALSE(failure.auts.has_value());
}

TEST(BaselineTest, TamperedAutsIsRejected)
{
    Rig r(VariantMode::Baseline);
    const auto c = r.challenge();
    r.answer(c.request);
    auto auts = *as_failure(r.answer(c.request)).auts;
    auts.mac_s[0] ^= 1;
    EXPECT_THROW(r.hn.handle_auts(r.supi, auts, c.request.rand, kSnName), ResyncRejected);
    auts.mac_s[0] ^= 1;
    auts.nonce_ue = UeNonce{};
    EXPECT_THROW(r.hn.handle_auts(r.supi, auts, c.request.rand, kSnName), ResyncRejected);
}

TEST(BaselineTest, AutsConcealsCounterUnderChallengeRand)
{
    Rig r(VariantMode::Baseline);
    r.ue->mutable_state().sqn_ue = Sqn(0x123456);
    const Rand rand = r.rng.draw<16>();
    const auto auts = ue_build_auts(r.ue->state(), rand);
    EXPECT_EQ(xor_bytes(auts.conc, crypto::f5_star(r.k, rand)), Sqn(0x123456).bytes());
    EXPECT_EQ(auts.mac_s, crypto::f1_star(r.k, Sqn(0x123456).bytes(), rand));
}

TEST(SnTest, WrongResponseAndUnknownSession)
{
    Rig r(VariantMode::Baseline);
    const auto held = r.sn.forward_and_hold(r.challenge().vector);
    EXPECT_EQ(r.sn.verify_response(held.handle, AuthenticationResponse{}), AuthOutcome::SnHashMismatch);
    EXPECT_THROW(r.sn.verify_response(SessionHandle{}, AuthenticationResponse{}), UnknownSession);
    EXPECT_THROW(Sn("", r.rng), ArgumentError);
}

TEST(HnTest, UnknownSubscriberAndBadSuci)
{
    Rig r(VariantMode::Baseline);
    auto req = r.ue->build_registration();
    req.suci.mnc = "02";
    EXPECT_THROW(r.hn.handle_registration(req, kSnName), SubscriberNotFound);
    req = r.ue->build_registration();
    req.suci.envelope.tag[0] ^= 1;
    EXPECT_THROW(r.hn.handle_registration(req, kSnName), IntegrityError);
}

TEST(SqnInSuciTest, HnRebasesOnReportedCounter)
{
    Rig r(VariantMode::SqnInSuci);
    r.ue->mutable_state().sqn_ue = Sqn(40);
    r.hn.record(r.supi).sqn_hn = Sqn(9000);
    const auto c = r.challenge();
    EXPECT_EQ(r.hn.record(r.supi).sqn_hn.value(), 41U);
    EXPECT_TRUE(std::holds_alternative<AuthenticationResponse>(r.answer(c.request)));
    EXPECT_EQ(r.ue->state().sqn_ue.value(), 41U);
}

TEST(SqnInSuciTest, SynchFailureCarriesNoAuts)
{
    Rig r(VariantMode::SqnInSuci);
    const auto c = r.challenge();
    r.answer(c.request);
    const auto &failure = as_failure(r.answer(c.request));
    EXPECT_EQ(failure.cause, FailureCause::SynchFailure);
    EXPECT_FALSE(failure.auts.has_value());
}

TEST(SqnInSuciTest, SyncHelperReturnsNextCounter)
{
    SubscriberRecord rec;
    rec.sqn_hn = Sqn(100);
    EXPECT_EQ(variants::hn_sync_from_suci(rec, Sqn(5)).value(), 6U);
    EXPECT_EQ(rec.sqn_hn.value(), 5U);
}

TEST(NonceInSuciTest, HonestRunAndStaleReplay)
{
    Rig r(VariantMode::NonceInSuci);
    const auto c = r.challenge();
    EXPECT_TRUE(r.ue->state().pending_nonce.has_value());
    EXPECT_TRUE(std::holds_alternative<AuthenticationResponse>(r.answer(c.request)));
    EXPECT_FALSE(r.ue->state().pending_nonce.has_value());

    EXPECT_TRUE(variants::is_uniform_reject(r.answer(c.request)));
    ASSERT_EQ(r.ue->reject_log().size(), 1U);
    EXPECT_EQ(r.ue->reject_log()[0], variants::RejectCause::StaleNonce);
}

TEST(NonceInSuciTest, ChallengeForOtherNonceIsRejected)
{
    Rig r(VariantMode::NonceInSuci);
    const auto c = r.challenge();
    r.ue->build_registration();
    EXPECT_TRUE(variants::is_uniform_reject(r.answer(c.request)));
    EXPECT_EQ(r.ue->reject_log().back(), variants::RejectCause::MacFailure);
}

TEST(NonceInSuciTest, ReplayedSuciIsDetected)
{
    Rig r(VariantMode::NonceInSuci);
    Transcript log;
    r.hn.set_security_log(&log);
    const auto req = r.ue->build_registration();
    EXPECT_TRUE(r.hn.handle_registration(req, kSnName).challenge.has_value());
    const auto again = r.hn.handle_registration(req, kSnName);
    EXPECT_FALSE(again.challenge.has_value());
    ASSERT_TRUE(again.reject.has_value());
    EXPECT_TRUE(variants::is_uniform_reject(*again.reject));
    ASSERT_EQ(log.size(), 1U);
    EXPECT_EQ(log.events()[0].kind, EventKind::NonceReuse);
    EXPECT_EQ(r.hn.reject_log(), std::vector{variants::RejectCause::NonceReuse});
    EXPECT_THROW(r.hn.handle_auts(r.supi, Auts{}, Rand{}, kSnName), ResyncRejected);
}

TEST(NonceInSuciTest, FreshnessBindingLayout)
{
    SeededRandom rng(4);
    const crypto::LongTermKey k(rng.draw<16>());
    const auto nonce = rng.draw<16>();
    const auto rand = rng.draw<16>();
    const auto autn = variants::challenge_freshness_binding(k, nonce, rand);

    FixedBytes<6> surrogate{};
    std::copy_n(nonce.begin(), 6, surrogate.begin());
    EXPECT_EQ(autn.conc, xor_bytes(surrogate, crypto::f5(k, rand)));
    EXPECT_EQ(autn.mac, crypto::f1(k, surrogate, rand, kDefaultAmf, nonce));
    EXPECT_TRUE(variants::freshness_binding_holds(k, nonce, rand, autn));

    auto other = nonce;
    other[15] ^= 1;
    EXPECT_FALSE(variants::freshness_binding_holds(k, other, rand, autn));
}

TEST(NonceCacheTest, EvictsOldestPerSubscriber)
{
    variants::NonceCache cache(2);
    const auto a = SupiIdentity::parse("001", "01", "0000000001");
    const auto b = SupiIdentity::parse("001", "01", "0000000002");
    const UeNonce n1{1}, n2{2}, n3{3};
    EXPECT_EQ(cache.check_and_insert(a, n1), variants::NonceCheck::Fresh);
    EXPECT_EQ(cache.check_and_insert(a, n1), variants::NonceCheck::Replayed);
    EXPECT_EQ(cache.check_and_insert(b, n1), variants::NonceCheck::Fresh);
    cache.check_and_insert(a, n2);
    cache.check_and_insert(a, n3);
    EXPECT_FALSE(cache.contains(a, n1));
    EXPECT_TRUE(cache.contains(a, n3));
    EXPECT_EQ(cache.size(a), 2U);
    EXPECT_THROW(variants::NonceCache(0), ArgumentError);
}

TEST(NonceInAutsTest, AutsUsesFreshMaskAndResyncWorks)
{
    Rig r(VariantMode::NonceInAuts);
    const auto c = r.challenge();
    r.answer(c.request);
    const auto &failure = as_failure(r.answer(c.request));
    ASSERT_TRUE(failure.auts && failure.auts->nonce_ue);
    const auto &auts = *failure.auts;
    EXPECT_EQ(xor_bytes(auts.conc, crypto::f5_star(r.k, *auts.nonce_ue)), r.ue->state().sqn_ue.bytes());

    const auto fresh = r.hn.handle_auts(r.supi, auts, c.request.rand, kSnName);
    EXPECT_TRUE(std::holds_alternative<AuthenticationResponse>(r.answer(fresh.request)));

    auto stripped = auts;
    stripped.nonce_ue.reset();
    EXPECT_THROW(r.hn.handle_auts(r.supi, stripped, c.request.rand, kSnName), ResyncRejected);
}

TEST(EnvelopeTest, EncFailureWrapsOnlyFailures)
{
    Rig r(VariantMode::EncFailure);
    const auto c = r.challenge();
    EXPECT_TRUE(std::holds_alternative<AuthenticationResponse>(r.answer(c.request)));
    const auto wrapped = r.answer(c.request);
    ASSERT_TRUE(std::holds_alternative<UniformEnvelope>(wrapped));
    const auto &env = std::get<UniformEnvelope>(wrapped);
    EXPECT_EQ(env.envelope.ciphertext.size(), variants::kUniformPadLength);
    const auto inner = r.hn.open_envelope(env);
    EXPECT_EQ(as_failure(inner).cause, FailureCause::SynchFailure);
}

TEST(EnvelopeTest, EncResponseWrapsResponsesToo)
{
    Rig r(VariantMode::EncResponse);
    const auto c = r.challenge();
    const auto held = r.sn.forward_and_hold(c.vector);
    const auto wrapped = r.answer(c.request);
    ASSERT_TRUE(std::holds_alternative<UniformEnvelope>(wrapped));
    const auto inner = r.hn.open_envelope(std::get<UniformEnvelope>(wrapped));
    EXPECT_EQ(r.sn.verify_response(held.handle, std::get<AuthenticationResponse>(inner)), AuthOutcome::Ok);
}

TEST(PaddingTest, RoundTripAndErrors)
{
    const Bytes msg{1, 2, 0, 0x80, 0};
    const Bytes padded = variants::pad_message(msg, 16);
    EXPECT_EQ(padded.size(), 16U);
    EXPECT_EQ(padded[5], 0x80);
    EXPECT_EQ(variants::unpad_message(padded), msg);
    EXPECT_EQ(variants::unpad_message(variants::pad_message(Bytes{}, 1)), Bytes{});
    EXPECT_THROW(variants::pad_message(Bytes(16), 16), PaddingError);
    EXPECT_THROW(variants::unpad_message(Bytes(8, 0)), PaddingError);
    EXPECT_THROW(variants::unpad_message(Bytes{1, 2, 3}), PaddingError);
}

TEST(UniformRejectTest, ConstantFrame)
{
    const Bytes f1 = encode_message(variants::uniform_reject());
    const Bytes f2 = encode_message(variants::uniform_reject());
    EXPECT_EQ(f1, f2);
    EXPECT_TRUE(variants::is_uniform_reject(ByteView(f1)));
    EXPECT_EQ(f1.size(), envelope_frame_size(variants::kUniformPadLength));

    SeededRandom rng(1);
    const auto kp = crypto::KeyPair::generate(rng);
    const auto real = variants::encrypt_uniform(AuthenticationResponse{}, kp.public_key, rng);
    EXPECT_FALSE(variants::is_uniform_reject(ProtocolMessage(real)));
    EXPECT_EQ(encode_message(real).size(), f1.size());
}

TEST(SuciPayloadTest, SizesByMode)
{
    EXPECT_EQ(variants::suci_payload_size(VariantMode::Baseline), 5U);
    EXPECT_EQ(variants::suci_payload_size(VariantMode::SqnInSuci), 11U);
    EXPECT_EQ(variants::suci_payload_size(VariantMode::NonceInSuci), 21U);
    EXPECT_THROW(variants::parse_suci_payload(VariantMode::SqnInSuci, Bytes(5)), DecodeError);

    UeState st;
    st.supi = SupiIdentity::parse("001", "01", "1111111111");
    st.variant = VariantMode::NonceInSuci;
    EXPECT_THROW(variants::build_suci_payload(st), ArgumentError);
}

TEST(TranscriptTest, SequenceAndVerdicts)
{
    Transcript t;
    t.frame(Direction::UeToSn, encode_message(AuthenticationResponse{}), 0);
    t.verdict(AuthOutcome::SynchFailure, 0);
    t.note("hello");
    ASSERT_EQ(t.size(), 3U);
    EXPECT_EQ(t.events()[1].seq, 1U);
    EXPECT_EQ(t.events()[0].tag, tag::kAuthenticationResponse);
    EXPECT_EQ(t.events()[0].length, 17U);
    EXPECT_EQ(verdict_outcome(t.events()[1]), AuthOutcome::SynchFailure);
    EXPECT_FALSE(verdict_outcome(t.events()[2]).has_value());
    for (auto o : {AuthOutcome::Ok, AuthOutcome::MacFailure, AuthOutcome::SynchFailure, AuthOutcome::UniformReject,
                   AuthOutcome::SnHashMismatch})
        EXPECT_EQ(parse_outcome(to_string(o)), o);
}

TEST(ModeTest, NamesRoundTrip)
{
    for (auto m : kAllModes)
        EXPECT_EQ(parse_variant(to_string(m)), m);
    EXPECT_THROW(parse_variant("variant-z"), ConfigError);
}
