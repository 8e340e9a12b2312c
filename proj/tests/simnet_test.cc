/*
 * Copyright 2026 The vsagg Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "test_util.h"
#include "vsagg/algebra/field.h"
#include "vsagg/simnet/channel.h"
#include "vsagg/simnet/codec.h"
#include "vsagg/simnet/config.h"
#include "vsagg/simnet/network.h"
#include "vsagg/simnet/scenario.h"
#include "vsagg/simnet/transcript.h"

namespace vsagg::simnet {
namespace {

using vsagg::testing::code_of;

Bytes from_hex(const std::string& hex) {
  Bytes out;
  for (std::size_t i = 0; i + 1 < hex.size(); i += 2) {
    out.push_back(static_cast<std::uint8_t>(std::stoi(hex.substr(i, 2), nullptr, 16)));
  }
  return out;
}

Bytes text(std::string_view s) { return Bytes(s.begin(), s.end()); }

TEST(CodecTest, RoundTrip) {
  const auto f = algebra::PrimeField::default_field();
  ByteWriter w;
  w.u8(7).u32(0xdeadbeef).u64(1ull << 40).str("hello").bytes(text("xy"));
  w.element(f->element(12345)).ids({1, 4, 9});
  const Bytes data = w.data();
  ByteReader r(data);
  EXPECT_EQ(r.u8(), 7);
  EXPECT_EQ(r.u32(), 0xdeadbeefu);
  EXPECT_EQ(r.u64(), 1ull << 40);
  EXPECT_EQ(r.str(), "hello");
  EXPECT_EQ(r.bytes(), text("xy"));
  EXPECT_EQ(r.element(f), f->element(12345));
  EXPECT_EQ(r.ids(), (IdSet{1, 4, 9}));
  EXPECT_TRUE(r.done());
  for (std::size_t cut = 0; cut < data.size(); ++cut) {
    ByteReader partial{std::span<const std::uint8_t>(data).first(cut)};
    EXPECT_EQ(code_of([&] {
                partial.u8();
                partial.u32();
                partial.u64();
                partial.str();
                partial.bytes();
                partial.element(f);
                partial.ids();
              }),
              ErrorCode::kDecodeError)
        << cut;
  }
}

TEST(CodecTest, ElementOutOfRangeIsRejected) {
  const auto f = algebra::PrimeField::create(31);
  const Bytes data = {0x40};
  ByteReader r(data);
  EXPECT_EQ(code_of([&] { r.element(f); }), ErrorCode::kDecodeError);
  EXPECT_EQ(to_hex(Bytes{0x00, 0xab, 0x10}), "00ab10");
}

// ChaCha20-Poly1305 AEAD test vector from RFC 8439.
TEST(ChannelTest, AeadKnownAnswer) {
  Bytes key;
  for (int i = 0x80; i < 0xa0; ++i) key.push_back(static_cast<std::uint8_t>(i));
  const Bytes nonce = from_hex("070000004041424344454647");
  const Bytes ad = from_hex("50515253c0c1c2c3c4c5c6c7");
  const Bytes pt = text(
      "Ladies and Gentlemen of the class of '99: If I could offer you only one tip for the "
      "future, sunscreen would be it.");
  const std::string expected =
      "d31a8d34648e60db7b86afbc53ef7ec2a4aded51296e08fea9e2b5a736ee62d63dbea45e8ca9671282fafb69da"
      "92728b1a71de0a9e060b2905d6a5b67ecd3b3692ddbd7f2d778b8c9803aee328091b58fab324e4fad675945585"
      "808b4831d7bc3ff4def08e4b7a9de576d26586cec64b6116"
      "1ae10b594f09e26a7e902ecbd0600691";
  const Bytes sealed = aead_encrypt(key, nonce, ad, pt);
  EXPECT_EQ(to_hex(sealed), expected);
  EXPECT_EQ(aead_decrypt(key, nonce, ad, sealed), pt);
}

TEST(ChannelTest, Sha256KnownAnswer) {
  EXPECT_EQ(to_hex(sha256(text("abc"))),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

struct SealFixture {
  ChannelKey key = derive_channel_key(algebra::PrimeField::default_field()->element(987654321));
  EnvelopeHeader header{3, 5, 2, 41, "share_resp"};
  Bytes payload = text("V_3(5) and friends");
};

TEST(ChannelTest, SealOpenRoundTrip) {
  SealFixture fx;
  const Bytes sealed = seal(fx.key, fx.header, fx.payload);
  EXPECT_EQ(sealed.size(), fx.payload.size() + kChannelTagBytes);
  EXPECT_EQ(open(fx.key, fx.header, sealed), fx.payload);
}

TEST(ChannelTest, EveryBitFlipIsRejected) {
  SealFixture fx;
  const Bytes sealed = seal(fx.key, fx.header, fx.payload);
  for (std::size_t bit = 0; bit < sealed.size() * 8; ++bit) {
    Bytes bad = sealed;
    bad[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    ASSERT_EQ(code_of([&] { open(fx.key, fx.header, bad); }), ErrorCode::kAuthFailure) << bit;
  }
}

TEST(ChannelTest, HeaderIsBound) {
  SealFixture fx;
  const Bytes sealed = seal(fx.key, fx.header, fx.payload);
  std::vector<EnvelopeHeader> altered(5, fx.header);
  altered[0].dst = 6;
  altered[1].src = 4;
  altered[2].round = 3;
  altered[3].seq = 42;
  altered[4].kind = "share_req";
  for (const auto& h : altered) {
    EXPECT_EQ(code_of([&] { open(fx.key, h, sealed); }), ErrorCode::kAuthFailure);
  }
  const ChannelKey other =
      derive_channel_key(algebra::PrimeField::default_field()->element(987654322));
  EXPECT_EQ(code_of([&] { open(other, fx.header, sealed); }), ErrorCode::kAuthFailure);
}

TEST(ConfigTest, ParsesDocument) {
  const auto doc = nlohmann::json::parse(R"({
    "seed": 9, "participants": 4, "round": 2, "phase_budget": 50,
    "delay": {"min": 2, "max": 3},
    "faults": [{"participant": 2, "phase": "masking", "action": "disconnect"},
               {"participant": 2, "phase": "verification", "action": "reconnect"},
               {"participant": 1, "phase": "setup", "action": "lose_shares"}]
  })");
  const SimConfig c = SimConfig::from_json(doc);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.participants, 4u);
  EXPECT_EQ(c.round, 2u);
  EXPECT_EQ(c.phase_budget, 50u);
  EXPECT_EQ(c.delay.min, 2u);
  EXPECT_EQ(c.delay.max, 3u);
  ASSERT_EQ(c.faults.size(), 3u);
  EXPECT_EQ(c.faults[1].action, FaultAction::kReconnect);
  EXPECT_EQ(c.faults[2].action, FaultAction::kLoseShares);
  EXPECT_EQ(SimConfig::from_json(c.to_json()).to_json(), c.to_json());
}

TEST(ConfigTest, RejectsBadDocuments) {
  for (const char* bad : {
           R"([1, 2])",
           R"({"participants": 0})",
           R"({"delay": {"min": 5, "max": 1}})",
           R"({"phase_budget": 0})",
           R"({"faults": {}})",
           R"({"faults": [{"participant": 9, "phase": "setup", "action": "disconnect"}]})",
           R"({"faults": [{"participant": 1, "phase": "lunch", "action": "disconnect"}]})",
           R"({"faults": [{"participant": 1, "phase": "setup", "action": "explode"}]})",
           R"({"faults": [{"participant": 1, "phase": "masking", "action": "lose_shares"}]})",
           R"({"seed": "nine"})",
       }) {
    EXPECT_EQ(code_of([&] { SimConfig::from_json(nlohmann::json::parse(bad)); }),
              ErrorCode::kConfigError)
        << bad;
  }
}

TEST(NetworkTest, OnlineFollowsSchedule) {
  SimConfig c;
  c.participants = 3;
  c.faults = {{1, Phase::kMasking, FaultAction::kDisconnect},
              {1, Phase::kVerification, FaultAction::kReconnect},
              {2, Phase::kAggregation, FaultAction::kDropOutbound}};
  Transcript tr;
  Network net(c, tr);
  const std::map<Phase, std::vector<bool>> expect = {
      {Phase::kSetup, {true, true, false}},
      {Phase::kMasking, {false, true, false}},
      {Phase::kAggregation, {false, true, true}},
      {Phase::kVerification, {true, true, false}},
      {Phase::kDecryption, {true, true, false}}};
  for (const auto& [phase, row] : expect) {
    net.begin_phase(phase);
    EXPECT_EQ(net.online(1), row[0]) << phase_name(phase);
    EXPECT_TRUE(net.online(0));
    EXPECT_EQ(net.online(2), row[1]);
    EXPECT_EQ(net.drops_outbound(2), row[2]);
  }
}

// Each participant pings the aggregator once per phase; the aggregator
// answers over the sealed channel.
class PingProtocol : public ScenarioProtocol {
 public:
  explicit PingProtocol(std::uint32_t n) : n_(n) {}

  bool step(Phase phase, std::size_t, Network& net) override {
    for (ParticipantId id = 1; id <= n_; ++id) {
      net.send(id, 0, "ping", text(std::string(phase_name(phase)) + std::to_string(id)));
    }
    return false;
  }

  void deliver(const Envelope& env, Network& net) override {
    if (env.kind() == "ping") {
      net.secure_send(key_, 0, env.src(), "pong", env.payload);
    } else {
      pongs_[env.dst()].push_back(secure_recv(key_, env));
    }
  }

  bool halted() const override { return false; }

  std::map<ParticipantId, std::vector<Bytes>> pongs_;

 private:
  std::uint32_t n_;
  ChannelKey key_ = derive_channel_key(algebra::PrimeField::create(31)->element(3));
};

SimConfig ping_config() {
  SimConfig c;
  c.seed = 17;
  c.participants = 4;
  c.faults = {{2, Phase::kMasking, FaultAction::kDisconnect},
              {2, Phase::kDecryption, FaultAction::kReconnect},
              {3, Phase::kAggregation, FaultAction::kDropOutbound}};
  return c;
}

TEST(ScenarioTest, EqualConfigsGiveEqualTranscripts) {
  PingProtocol a(4);
  PingProtocol b(4);
  const auto ta = run_scenario(ping_config(), a).transcript;
  const auto tb = run_scenario(ping_config(), b).transcript;
  EXPECT_EQ(ta.records(), tb.records());
  SimConfig other = ping_config();
  other.seed = 18;
  PingProtocol c(4);
  EXPECT_NE(run_scenario(other, c).transcript.records(), ta.records());
}

TEST(ScenarioTest, DisconnectedParticipantIsSilent) {
  PingProtocol proto(4);
  const auto out = run_scenario(ping_config(), proto);
  std::string phase;
  std::map<std::string, std::map<ParticipantId, int>> sends;
  for (const auto& r : out.transcript.records()) {
    if (r.event == "phase") phase = r.kind;
    if (r.event == "send") ++sends[phase][r.src];
  }
  for (const char* silent : {"masking", "aggregation", "verification"}) {
    EXPECT_EQ(sends[silent][2], 0) << silent;
    EXPECT_EQ(sends[silent][1], 1) << silent;
  }
  EXPECT_EQ(sends["decryption"][2], 1);
  // Participant 3's aggregation ping is emitted but dropped.
  EXPECT_EQ(sends["aggregation"][3], 1);
  EXPECT_EQ(out.transcript.count("drop", "ping"), 1u);
  EXPECT_EQ(proto.pongs_[1].size(), 5u);
  EXPECT_EQ(proto.pongs_[2].size(), 2u);
  EXPECT_EQ(proto.pongs_[3].size(), 4u);
  EXPECT_EQ(proto.pongs_[1][0], text("setup1"));
}

// Every delivery follows a matching send; nothing arrives that was not sent.
TEST(ScenarioTest, DeliveriesFollowSends) {
  PingProtocol proto(4);
  const auto out = run_scenario(ping_config(), proto);
  const auto& rs = out.transcript.records();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (rs[i].event != "deliver") continue;
    bool found = false;
    for (std::size_t j = 0; j < i && !found; ++j) {
      found = rs[j].event == "send" && rs[j].src == rs[i].src && rs[j].dst == rs[i].dst &&
              rs[j].kind == rs[i].kind && rs[j].digest == rs[i].digest &&
              rs[j].time <= rs[i].time;
    }
    ASSERT_TRUE(found) << i;
  }
}

TEST(ScenarioTest, LateDeliveriesExhaustTheBudget) {
  SimConfig c;
  c.participants = 2;
  c.delay = {20, 30};
  c.phase_budget = 10;
  PingProtocol proto(2);
  const auto out = run_scenario(c, proto);
  EXPECT_TRUE(out.budget_exhausted);
  EXPECT_EQ(out.transcript.count("late"), 10u);
  EXPECT_EQ(out.transcript.count("deliver"), 0u);
}

TEST(TranscriptTest, NdjsonLines) {
  PingProtocol proto(2);
  SimConfig c;
  c.participants = 2;
  const auto out = run_scenario(c, proto);
  std::istringstream in(out.transcript.to_ndjson());
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    const auto& r = out.transcript.records()[n++];
    EXPECT_EQ(j.at("t").get<std::uint64_t>(), r.time);
    EXPECT_EQ(j.at("event").get<std::string>(), r.event);
    EXPECT_EQ(j.at("src").get<std::uint32_t>(), r.src);
    EXPECT_EQ(j.at("kind").get<std::string>(), r.kind);
    if (r.event == "send") EXPECT_EQ(j.at("digest").get<std::string>().size(), 16u);
  }
  EXPECT_EQ(n, out.transcript.records().size());
}

}  // namespace
}  // namespace vsagg::simnet
