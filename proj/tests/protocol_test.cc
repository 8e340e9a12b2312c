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
#include <set>
#include <vector>

#include "test_util.h"
#include "vsagg/algebra/field.h"
#include "vsagg/maskmac/maskmac.h"
#include "vsagg/protocol/aggregator.h"
#include "vsagg/protocol/election.h"
#include "vsagg/protocol/key_holders.h"

namespace vsagg::protocol {
namespace {

using vsagg::testing::code_of;

TEST(ElectionTest, SingleMemberLeads) {
  EXPECT_EQ(elect_leader({4}, {{4, 99}}), 4u);
  EXPECT_EQ(code_of([] { elect_leader({}, {}); }), ErrorCode::kInvalidArgument);
}

TEST(ElectionTest, IndexIsSumOfRevealsModSize) {
  // (3 + 4 + 10) mod 3 = 2 -> third member.
  EXPECT_EQ(elect_leader({2, 5, 7}, {{2, 3}, {5, 4}, {7, 10}}), 7u);
  EXPECT_EQ(elect_leader({2, 5, 7}, {{2, 3}, {5, 4}, {7, 11}}), 2u);
}

// Over Z_5 reveals for five members, every leader wins equally often, and
// varying any one member's reveal alone cycles through every leader.
TEST(ElectionTest, UniformOverRevealEnumeration) {
  const IdSet members = {1, 2, 3, 4, 5};
  std::map<ParticipantId, int> wins;
  std::vector<std::uint64_t> r(5, 0);
  for (int code = 0; code < 3125; ++code) {
    int c = code;
    for (auto& v : r) {
      v = static_cast<std::uint64_t>(c % 5);
      c /= 5;
    }
    ++wins[elect_leader(members, {{1, r[0]}, {2, r[1]}, {3, r[2]}, {4, r[3]}, {5, r[4]}})];
  }
  for (auto id : members) EXPECT_EQ(wins[id], 625);
  for (ParticipantId who = 1; who <= 5; ++who) {
    std::set<ParticipantId> seen;
    for (std::uint64_t v = 0; v < 5; ++v) {
      std::map<ParticipantId, std::uint64_t> reveals = {{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 0}};
      reveals[who] = v;
      seen.insert(elect_leader(members, reveals));
    }
    EXPECT_EQ(seen.size(), 5u) << who;
  }
}

TEST(ElectionTest, CommitRevealChecks) {
  const IdSet eligible = {1, 2, 3};
  std::map<ParticipantId, CommitDigest> commits;
  const std::map<ParticipantId, std::uint64_t> reveals = {{1, 11}, {2, 22}, {3, 33}};
  for (const auto& [id, v] : reveals) commits[id] = commit_digest(id, 4, v);
  const auto ok = run_election(commits, reveals, eligible, 4);
  ASSERT_TRUE(ok.leader);
  EXPECT_EQ(*ok.leader, elect_leader(eligible, reveals));
  EXPECT_EQ(run_election(commits, reveals, eligible, 4).leader, ok.leader);

  auto missing = reveals;
  missing.erase(2);
  const auto m = run_election(commits, missing, eligible, 4);
  EXPECT_FALSE(m.leader);
  EXPECT_EQ(m.missing, (IdSet{2}));

  auto lying = reveals;
  lying[3] = 34;
  const auto l = run_election(commits, lying, eligible, 4);
  EXPECT_FALSE(l.leader);
  EXPECT_EQ(l.missing, (IdSet{3}));
  // A commit for another round does not open.
  EXPECT_NE(commit_digest(1, 4, 11), commit_digest(1, 5, 11));
}

TEST(KeyHolderIndexTest, QuorumCounting) {
  const auto full = KeyHolderIndex::after_setup({1, 2, 3, 4}, {1, 2, 3, 4});
  for (ParticipantId d = 1; d <= 4; ++d) EXPECT_EQ(full.holders_of(d), (IdSet{1, 2, 3, 4}));
  const auto partial = KeyHolderIndex::after_setup({1, 2, 3, 4, 5, 6, 7}, {1, 2, 3});
  EXPECT_EQ(partial.holders_of(5), (IdSet{1, 2, 3}));
  EXPECT_TRUE(partial.has_quorum(5, 3, {1, 2, 3, 4, 5}));
  EXPECT_EQ(partial.available(5, {1, 3, 4, 5}), 2u);
  EXPECT_FALSE(partial.has_quorum(5, 3, {1, 3, 4, 5}));
  KeyHolderIndex manual;
  manual.record(9, 1);
  manual.record(9, 2);
  EXPECT_EQ(manual.available(9, {1, 2, 3}), 2u);
  EXPECT_TRUE(manual.holders_of(8).empty());
}

class AggregatorTest : public ::testing::Test {
 protected:
  algebra::FieldPtr f = algebra::PrimeField::create(1000003);
  maskmac::Prg prg{f};
  maskmac::AuthKey s{f->element(5)};

  maskmac::MaskedVector masked(std::int64_t w, std::uint64_t round = 1) {
    const std::vector<algebra::FieldElement> v = {f->element(w), f->element(w + 1)};
    return maskmac::mask_vector(prg, v, f->element(w * 3), f->element(w * 7), s, round);
  }
};

TEST_F(AggregatorTest, SumsExactlyTheReceivedVectors) {
  AggregatorState agg(2, TamperPolicy::kHonest, f->zero(), Rng(1));
  agg.receive(1, masked(10));
  agg.receive(3, masked(20));
  agg.receive(3, masked(99));
  const auto out = agg.aggregate_round({1, 2, 3, 4, 5});
  EXPECT_EQ(out.m_set, (IdSet{1, 3}));
  EXPECT_EQ(out.failed_ids, (std::vector<ParticipantId>{2, 4, 5}));
  ASSERT_EQ(out.pairs.size(), 2u);
  EXPECT_EQ(maskmac::unmask(prg, out.pairs[0], f->element(90)), f->element(30));
  EXPECT_TRUE(maskmac::verify(prg, out.pairs[1], f->element(210), s, out.pairs[1].label));
}

TEST_F(AggregatorTest, StalenessTimeoutBelowSMin) {
  AggregatorState agg(3, TamperPolicy::kHonest, f->zero(), Rng(2));
  agg.receive(1, masked(1));
  agg.receive(2, masked(2));
  EXPECT_EQ(code_of([&] { agg.aggregate_round({1, 2, 3}); }), ErrorCode::kStalenessTimeout);
}

// A vector masked for an earlier round does not aggregate with this one.
TEST_F(AggregatorTest, ReplayedRoundIsRejected) {
  AggregatorState agg(1, TamperPolicy::kHonest, f->zero(), Rng(3));
  agg.receive(1, masked(1, 2));
  agg.receive(2, masked(2, 1));
  EXPECT_EQ(code_of([&] { agg.aggregate_round({1, 2}); }), ErrorCode::kLabelMismatch);
}

TEST_F(AggregatorTest, TamperPoliciesBreakVerification) {
  for (auto policy : {TamperPolicy::kFlipElement, TamperPolicy::kSubstituteAll,
                      TamperPolicy::kInjectOffset}) {
    AggregatorState agg(1, policy, f->element(64), Rng(4));
    agg.receive(1, masked(10));
    agg.receive(2, masked(20));
    const auto out = agg.aggregate_round({1, 2});
    EXPECT_FALSE(maskmac::verify(prg, out.pairs[0], f->element(210), s, out.pairs[0].label))
        << tamper_policy_name(policy);
  }
  EXPECT_EQ(parse_tamper_policy("inject_offset"), TamperPolicy::kInjectOffset);
  EXPECT_EQ(tamper_policy_name(TamperPolicy::kSubstituteAll), "substitute_all");
  EXPECT_EQ(code_of([] { parse_tamper_policy("sneaky"); }), ErrorCode::kConfigError);
}

}  // namespace
}  // namespace vsagg::protocol
