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

#include "vsagg/protocol/round.h"

#include <algorithm>
#include <memory>
#include <utility>

#include "vsagg/common/random.h"
#include "vsagg/protocol/election.h"
#include "vsagg/protocol/key_holders.h"
#include "vsagg/sharing/sharing.h"
#include "vsagg/simnet/channel.h"
#include "vsagg/simnet/codec.h"
#include "vsagg/simnet/network.h"
#include "vsagg/simnet/scenario.h"

namespace vsagg::protocol {
namespace {

using algebra::FieldElement;
using algebra::FieldPtr;
using algebra::GradientVector;
using maskmac::MaskedPair;
using maskmac::MaskedVector;
using maskmac::RoundLabel;
using simnet::ByteReader;
using simnet::ByteWriter;
using simnet::Envelope;
using simnet::Network;
using simnet::Phase;

constexpr std::uint64_t kParticipantStream = 0x1000;
constexpr std::uint64_t kInputStream = 0x2000;
constexpr std::uint64_t kAggregatorStream = 0xa66;
constexpr int kMaxResamples = 64;

namespace msg {
constexpr const char* kHello = "hello";
constexpr const char* kVShare = "v_share";
constexpr const char* kRoster = "roster";
constexpr const char* kAShare = "a_share";
constexpr const char* kResample = "s_resample";
constexpr const char* kSetupDone = "setup_done";
constexpr const char* kSetupRoster = "setup_roster";
constexpr const char* kMasked = "masked";
constexpr const char* kAggregate = "aggregate";
constexpr const char* kCommit = "commit";
constexpr const char* kReveal = "reveal";
constexpr const char* kRecoveryReq = "recovery_req";
constexpr const char* kRecoveryResp = "recovery_resp";
constexpr const char* kShareReq = "share_req";
constexpr const char* kShareResp = "share_resp";
constexpr const char* kReject = "reject";
constexpr const char* kResult = "result";
}  // namespace msg

struct Context {
  RoundSpec spec;
  FieldPtr field;
  std::size_t t;
  std::size_t l;
  std::uint64_t round;
  std::uint32_t n;
  maskmac::Prg prg;
  algebra::FixedPointCodec codec;
  std::size_t* setup_elements;
};

void write_pairs(ByteWriter& w, const MaskedVector& v) {
  w.u32(static_cast<std::uint32_t>(v.size()));
  for (const auto& p : v) {
    w.element(p.c1).element(p.c2).u64(p.label.round).u64(p.label.element_index);
  }
}

MaskedVector read_pairs(ByteReader& r, const FieldPtr& field) {
  const std::uint32_t n = r.u32();
  MaskedVector v;
  v.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    MaskedPair p;
    p.c1 = r.element(field);
    p.c2 = r.element(field);
    p.label.round = r.u64();
    p.label.element_index = r.u64();
    v.push_back(std::move(p));
  }
  return v;
}

bool labels_match(const MaskedVector& v, std::uint64_t round, std::size_t l) {
  if (v.size() != l) return false;
  for (std::size_t i = 0; i < l; ++i) {
    if (v[i].label != RoundLabel{round, i}) return false;
  }
  return true;
}

std::vector<ParticipantId> without(const IdSet& ids, ParticipantId self) {
  std::vector<ParticipantId> out;
  for (ParticipantId id : ids) {
    if (id != self) out.push_back(id);
  }
  return out;
}

IdSet intersect(const IdSet& a, const IdSet& b) {
  IdSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

class Participant {
 public:
  Participant(ParticipantId id, const Context& ctx, std::uint64_t seed, GradientVector input)
      : id_(id),
        ctx_(ctx),
        rng_(seed, kParticipantStream + id),
        dealer_(id, ctx.t, ctx.field, rng_),
        bundle_(id),
        input_(std::move(input)) {}

  ParticipantId id() const { return id_; }
  RoundPhase phase() const { return phase_; }
  bool in_roster() const { return roster_.contains(id_); }
  bool committed() const { return committed_; }
  bool lost() const { return lost_; }
  bool recovered() const { return recovered_; }
  bool setup_complete() const { return setup_complete_; }
  bool is_leader() const { return committed_ && leader_ == id_; }
  const std::optional<ParticipantId>& leader() const { return leader_; }
  const IdSet& u_view() const { return u_view_; }
  const std::optional<std::vector<FieldElement>>& plaintext() const { return plaintext_; }
  bool auth_key_zero() const { return s_.has_value() && s_->is_zero(); }

  ParticipantReport report() const { return {phase_, setup_complete_, recovered_, plaintext_}; }

  // Setup: hello to the aggregator, V_i(j) and s_i to every other id.
  void begin_setup(Network& net) {
    if (!net.online(id_)) return;
    phase_ = RoundPhase::kSetup;
    net.send(id_, kAggregatorId, msg::kHello, {});
    for (ParticipantId j = 1; j <= ctx_.n; ++j) {
      if (j == id_) continue;
      ByteWriter w;
      w.element(dealer_.v_poly().eval(j)).element(dealer_.partial_auth_key());
      if (net.send(id_, j, msg::kVShare, std::move(w).data())) ++*ctx_.setup_elements;
    }
  }

  void deal_a(Network& net) {
    if (!in_roster() || !net.online(id_)) return;
    const auto peers = without(roster_, id_);
    if (!bundle_.has_v_from_all(peers)) return;
    for (ParticipantId j : peers) {
      if (!s_parts_.contains(j)) return;
    }
    dealer_.accumulate_sv(bundle_, peers);
    recompute_auth_key();
    for (const auto& share : dealer_.deal_round2(peers, rng_)) {
      ByteWriter w;
      w.element(share.scalar());
      if (net.send(id_, share.holder, msg::kAShare, std::move(w).data())) ++*ctx_.setup_elements;
    }
    dealt_a_ = true;
  }

  void resample_auth_key(Network& net) {
    if (!auth_key_zero()) return;
    dealer_.set_partial_auth_key(ctx_.field->random(rng_));
    for (ParticipantId j : without(roster_, id_)) {
      ByteWriter w;
      w.element(dealer_.partial_auth_key());
      net.send(id_, j, msg::kResample, std::move(w).data());
    }
  }

  void refresh_auth_key() {
    if (s_) recompute_auth_key();
  }

  void recompute_auth_key() {
    FieldElement s = dealer_.partial_auth_key();
    for (ParticipantId j : without(roster_, id_)) s += s_parts_.at(j);
    s_ = s;
  }

  void finish_setup(Network& net) {
    if (!dealt_a_ || !net.online(id_)) return;
    setup_complete_ = bundle_.has_a_from_all(without(roster_, id_));
    if (net.loses_shares(id_)) {
      dealer_.forget_setup_material();
      bundle_.clear();
      setup_complete_ = false;
      lost_ = true;
      net.note("lose_shares", id_, id_, "setup");
    }
    if (setup_complete_) net.send(id_, kAggregatorId, msg::kSetupDone, {});
  }

  void mask(Network& net) {
    if (!in_roster() || !s_ || t_set_.empty() || !net.online(id_)) return;
    phase_ = RoundPhase::kMasking;
    const maskmac::AuthKey s(*s_);
    const MaskedVector masked = maskmac::mask_vector(
        ctx_.prg, input_, dealer_.masking_secret(), dealer_.mac_key(), s, ctx_.round);
    ByteWriter w;
    write_pairs(w, masked);
    net.send(id_, kAggregatorId, msg::kMasked, std::move(w).data());
  }

  void commit(Network& net) {
    committed_ = false;
    commits_.clear();
    reveals_.clear();
    if (!aggregate_ || !net.online(id_)) return;
    phase_ = RoundPhase::kVerification;
    reveal_ = rng_.next_u64();
    committed_ = true;
    const CommitDigest digest = commit_digest(id_, ctx_.round, reveal_);
    for (ParticipantId j : without(roster_, id_)) {
      if (excluded_.contains(j)) continue;
      net.send(id_, j, msg::kCommit, Bytes(digest.begin(), digest.end()));
    }
  }

  void reveal(Network& net) {
    if (!committed_) return;
    for (ParticipantId j : without(roster_, id_)) {
      if (excluded_.contains(j)) continue;
      ByteWriter w;
      w.u64(reveal_);
      net.send(id_, j, msg::kReveal, std::move(w).data());
    }
  }

  // False when some committed member failed to reveal; they are excluded
  // and the election has to run again.
  bool elect() {
    if (!committed_) return true;
    auto commits = commits_;
    auto reveals = reveals_;
    commits[id_] = commit_digest(id_, ctx_.round, reveal_);
    reveals[id_] = reveal_;
    u_view_.clear();
    for (const auto& [id, d] : commits) u_view_.insert(id);
    // Prefer a leader that contributed, so a non-contributor never sees the
    // unmasked sum.
    IdSet eligible = intersect(u_view_, t_set_);
    if (IdSet contributing = intersect(eligible, m_set_); !contributing.empty()) {
      eligible = std::move(contributing);
    }
    const ElectionOutcome outcome = run_election(commits, reveals, eligible, ctx_.round);
    if (!outcome.missing.empty()) {
      excluded_.insert(outcome.missing.begin(), outcome.missing.end());
      return false;
    }
    leader_ = outcome.leader;
    return true;
  }

  void request_recovery(Network& net) {
    if (!committed_ || !lost_) return;
    for (ParticipantId h : intersect(u_view_, t_set_)) {
      if (h != id_) net.send(id_, h, msg::kRecoveryReq, {});
    }
  }

  // Rebuilds s_{v_q} from A_q(h); false if fewer than t helpers answered.
  bool finish_recovery(Network& net) {
    if (!committed_ || !lost_) return true;
    if (rec_own_a_at_.size() < ctx_.t) return false;
    dealer_.restore_sv(sharing::recover_lost_share(id_, rec_own_a_at_, ctx_.t));
    recovered_ = true;
    net.note("recovery", id_, id_, "s_v", "helpers=" + std::to_string(rec_own_a_at_.size()));
    return true;
  }

  // Leader: checks quorums and asks every other eligible holder for its
  // V-evaluations of the contributors' polynomials.
  std::optional<std::string> request_shares(Network& net) {
    const IdSet eligible = intersect(u_view_, t_set_);
    for (ParticipantId i : m_set_) {
      if (!holders_.has_quorum(i, ctx_.t, eligible)) {
        return "dealer " + std::to_string(i) + " has " +
               std::to_string(holders_.available(i, eligible)) + " reachable holders";
      }
    }
    collected_.clear();
    collected_[id_] = own_v_shares(m_set_);
    for (ParticipantId h : eligible) {
      if (h == id_) continue;
      ByteWriter w;
      w.ids(m_set_);
      net.secure_send(channel_key(h), id_, h, msg::kShareReq, w.data());
    }
    return std::nullopt;
  }

  // Leader: reconstructs k and the pad key, checks every element.
  std::optional<std::string> verify_aggregate(Network& net) {
    FieldElement k = ctx_.field->zero();
    FieldElement v0 = ctx_.field->zero();
    for (ParticipantId i : m_set_) {
      sharing::ShareMap shares;
      for (const auto& [holder, values] : collected_) {
        auto it = values.find(i);
        if (it != values.end()) shares.emplace(holder, it->second);
      }
      if (shares.size() < ctx_.t) {
        return "collected " + std::to_string(shares.size()) + " shares of dealer " +
               std::to_string(i);
      }
      k += sharing::reconstruct_at(shares, i, ctx_.t);
      v0 += sharing::reconstruct_secret(shares, ctx_.t);
    }
    const maskmac::AuthKey s(*s_);
    bool ok = true;
    for (std::size_t e = 0; e < aggregate_->size() && ok; ++e) {
      ok = maskmac::verify(ctx_.prg, (*aggregate_)[e], k, s, RoundLabel{ctx_.round, e});
    }
    net.note("verdict", id_, id_, ok ? "accept" : "reject");
    if (!ok) {
      phase_ = RoundPhase::kRejected;
      for (ParticipantId q : u_view_) {
        if (q != id_) net.send(id_, q, msg::kReject, {});
      }
      return std::nullopt;
    }
    pad_key_ = v0;
    return std::nullopt;
  }

  bool accepted() const { return pad_key_.has_value(); }

  void release(Network& net) {
    if (!pad_key_ || !net.online(id_)) return;
    phase_ = RoundPhase::kDecryption;
    std::vector<FieldElement> sum;
    sum.reserve(aggregate_->size());
    for (const auto& pair : *aggregate_) sum.push_back(maskmac::unmask(ctx_.prg, pair, *pad_key_));
    ByteWriter w;
    w.u32(static_cast<std::uint32_t>(sum.size()));
    for (const auto& e : sum) w.element(e);
    for (ParticipantId q : intersect(u_view_, m_set_)) {
      if (q != id_) net.secure_send(channel_key(q), id_, q, msg::kResult, w.data());
    }
    if (m_set_.contains(id_)) {
      plaintext_ = std::move(sum);
      phase_ = RoundPhase::kDone;
    }
  }

  void deliver(const Envelope& env, Network& net) {
    const std::string& kind = env.kind();
    try {
      if (kind == msg::kVShare) {
        ByteReader r(env.payload);
        bundle_.receive({env.src(), id_, sharing::ShareKind::kV, r.element(ctx_.field)});
        s_parts_.insert_or_assign(env.src(), r.element(ctx_.field));
      } else if (kind == msg::kRoster) {
        ByteReader r(env.payload);
        roster_ = r.ids();
      } else if (kind == msg::kAShare) {
        ByteReader r(env.payload);
        bundle_.receive({env.src(), id_, sharing::ShareKind::kA, r.element(ctx_.field)});
      } else if (kind == msg::kResample) {
        ByteReader r(env.payload);
        s_parts_.insert_or_assign(env.src(), r.element(ctx_.field));
      } else if (kind == msg::kSetupRoster) {
        ByteReader r(env.payload);
        t_set_ = r.ids();
        holders_ = KeyHolderIndex::after_setup(roster_, t_set_);
      } else if (kind == msg::kAggregate) {
        ByteReader r(env.payload);
        m_set_ = r.ids();
        aggregate_ = read_pairs(r, ctx_.field);
        if (phase_ == RoundPhase::kMasking) phase_ = RoundPhase::kAggregation;
      } else if (kind == msg::kCommit) {
        if (excluded_.contains(env.src()) || env.payload.size() != 32) return;
        CommitDigest d;
        std::copy(env.payload.begin(), env.payload.end(), d.begin());
        commits_[env.src()] = d;
      } else if (kind == msg::kReveal) {
        ByteReader r(env.payload);
        if (commits_.contains(env.src())) reveals_[env.src()] = r.u64();
      } else if (kind == msg::kRecoveryReq) {
        answer_recovery(env.src(), net);
      } else if (kind == msg::kRecoveryResp) {
        const Bytes plain = simnet::secure_recv(bootstrap_key_as_dealer(env.src()), env);
        ByteReader r(plain);
        rec_own_a_at_.insert_or_assign(env.src(), r.element(ctx_.field));
        rec_peer_a_.insert_or_assign(env.src(), r.element(ctx_.field));
      } else if (kind == msg::kShareReq) {
        const Bytes plain = simnet::secure_recv(channel_key(env.src()), env);
        ByteReader r(plain);
        const IdSet dealers = r.ids();
        ByteWriter w;
        const auto values = own_v_shares(dealers);
        w.u32(static_cast<std::uint32_t>(values.size()));
        for (const auto& [dealer, value] : values) w.u32(dealer).element(value);
        net.secure_send(channel_key(env.src()), id_, env.src(), msg::kShareResp, w.data());
      } else if (kind == msg::kShareResp) {
        const Bytes plain = simnet::secure_recv(channel_key(env.src()), env);
        ByteReader r(plain);
        const std::uint32_t n = r.u32();
        auto& slot = collected_[env.src()];
        for (std::uint32_t i = 0; i < n; ++i) {
          const ParticipantId dealer = r.u32();
          slot.insert_or_assign(dealer, r.element(ctx_.field));
        }
      } else if (kind == msg::kReject) {
        if (committed_) phase_ = RoundPhase::kRejected;
      } else if (kind == msg::kResult) {
        const Bytes plain = simnet::secure_recv(channel_key(env.src()), env);
        ByteReader r(plain);
        const std::uint32_t n = r.u32();
        std::vector<FieldElement> sum;
        for (std::uint32_t i = 0; i < n; ++i) sum.push_back(r.element(ctx_.field));
        if (m_set_.contains(id_) && phase_ != RoundPhase::kRejected) {
          plaintext_ = std::move(sum);
          phase_ = RoundPhase::kDone;
        }
      }
    } catch (const Error& e) {
      net.note(e.code() == ErrorCode::kAuthFailure ? "auth_fail" : "bad_message", env.src(),
               id_, kind, e.what());
    }
  }

 private:
  // Key for traffic with a peer: k_{ij} = A_i(j) + A_j(i).
  simnet::ChannelKey channel_key(ParticipantId peer) const {
    if (dealer_.a_poly()) {
      return simnet::derive_channel_key(
          sharing::pairwise_key(id_, peer, *dealer_.a_poly(), bundle_.received_a()));
    }
    auto own = rec_own_a_at_.find(peer);
    if (own == rec_own_a_at_.end()) {
      throw Error(ErrorCode::kMissingShare, "no pairwise key material for " + std::to_string(peer));
    }
    return simnet::derive_channel_key(sharing::pairwise_key(id_, peer, own->second, rec_peer_a_));
  }

  // Recovery traffic for a member that lost its A-material is keyed by
  // V_q(h), which only dealer q and holder h know.
  simnet::ChannelKey bootstrap_key_as_dealer(ParticipantId holder) const {
    return simnet::derive_channel_key(dealer_.v_poly().eval(holder));
  }

  void answer_recovery(ParticipantId q, Network& net) {
    if (!setup_complete_ || !dealer_.a_poly()) return;
    const auto v = bundle_.v_from(q);
    const auto a = bundle_.a_from(q);
    if (!v || !a) return;
    ByteWriter w;
    w.element(*a).element(dealer_.a_poly()->eval(q));
    net.secure_send(simnet::derive_channel_key(*v), id_, q, msg::kRecoveryResp, w.data());
  }

  std::map<ParticipantId, FieldElement> own_v_shares(const IdSet& dealers) const {
    std::map<ParticipantId, FieldElement> out;
    if (!setup_complete_) return out;
    for (ParticipantId i : dealers) {
      if (i == id_) {
        out.emplace(i, dealer_.v_poly().eval(id_));
      } else if (auto v = bundle_.v_from(i)) {
        out.emplace(i, *v);
      }
    }
    return out;
  }

  ParticipantId id_;
  const Context& ctx_;
  Rng rng_;
  sharing::DealerState dealer_;
  sharing::ShareBundle bundle_;
  GradientVector input_;
  RoundPhase phase_ = RoundPhase::kIdle;

  IdSet roster_;
  IdSet t_set_;
  KeyHolderIndex holders_;
  std::map<ParticipantId, FieldElement> s_parts_;
  std::optional<FieldElement> s_;
  bool dealt_a_ = false;
  bool setup_complete_ = false;
  bool lost_ = false;
  bool recovered_ = false;

  IdSet m_set_;
  std::optional<MaskedVector> aggregate_;

  bool committed_ = false;
  std::uint64_t reveal_ = 0;
  std::map<ParticipantId, CommitDigest> commits_;
  std::map<ParticipantId, std::uint64_t> reveals_;
  IdSet excluded_;
  IdSet u_view_;
  std::optional<ParticipantId> leader_;

  // Recovered A_q(h) and A_h(q), keyed by helper h.
  sharing::ShareMap rec_own_a_at_;
  sharing::ShareMap rec_peer_a_;

  std::map<ParticipantId, std::map<ParticipantId, FieldElement>> collected_;
  std::optional<FieldElement> pad_key_;
  std::optional<std::vector<FieldElement>> plaintext_;
};

class RoundDriver final : public simnet::ScenarioProtocol {
 public:
  RoundDriver(const simnet::SimConfig& config, const RoundSpec& spec)
      : ctx_{spec,
             spec.field(),
             spec.threshold,
             spec.gradient_length,
             config.round,
             config.participants,
             maskmac::Prg(spec.field()),
             algebra::FixedPointCodec(spec.field(), spec.scale_bits, spec.clip_bound),
             &setup_elements_},
        aggregator_(spec.s_min, spec.tamper, ctx_.codec.encode(1.0),
                    Rng(config.seed, kAggregatorStream)) {
    if (ctx_.t < 2) throw Error(ErrorCode::kConfigError, "threshold must be at least 2");
    if (ctx_.t > ctx_.n) throw Error(ErrorCode::kConfigError, "threshold exceeds participants");
    if (ctx_.l < 1) throw Error(ErrorCode::kConfigError, "gradient_length must be positive");
    try {
      ctx_.codec.require_capacity(ctx_.n);
    } catch (const Error& e) {
      throw Error(ErrorCode::kConfigError, e.what());
    }
    for (const auto& [id, g] : spec.gradients) {
      if (id < 1 || id > ctx_.n || g.size() != ctx_.l) {
        throw Error(ErrorCode::kConfigError,
                    "gradient for participant " + std::to_string(id) + " does not fit the round");
      }
    }
    for (ParticipantId id = 1; id <= ctx_.n; ++id) {
      std::vector<double> g;
      if (auto it = spec.gradients.find(id); it != spec.gradients.end()) {
        g = it->second;
      } else {
        Rng input_rng(config.seed, kInputStream + id);
        for (std::size_t e = 0; e < ctx_.l; ++e) {
          g.push_back((2.0 * input_rng.uniform01() - 1.0) * spec.clip_bound);
        }
      }
      inputs_.emplace(id, ctx_.codec.encode(g));
      participants_.emplace(id,
                            std::make_unique<Participant>(id, ctx_, config.seed, inputs_.at(id)));
    }
  }

  bool halted() const override { return halted_; }

  bool step(Phase phase, std::size_t index, Network& net) override {
    if (index == 0) stage_ = 0;
    switch (phase) {
      case Phase::kSetup:
        return setup_step(net);
      case Phase::kMasking:
        for (auto& [id, p] : participants_) p->mask(net);
        return false;
      case Phase::kAggregation:
        aggregation_step(net);
        return false;
      case Phase::kVerification:
        return verification_step(net);
      case Phase::kDecryption:
        for (auto& [id, p] : participants_) {
          if (p->is_leader()) p->release(net);
        }
        return false;
    }
    return false;
  }

  void deliver(const Envelope& env, Network& net) override {
    if (env.dst() != kAggregatorId) {
      participants_.at(env.dst())->deliver(env, net);
      return;
    }
    const std::string& kind = env.kind();
    if (kind == msg::kHello) {
      hello_.insert(env.src());
    } else if (kind == msg::kSetupDone) {
      setup_done_.insert(env.src());
    } else if (kind == msg::kMasked) {
      try {
        ByteReader r(env.payload);
        MaskedVector v = read_pairs(r, ctx_.field);
        if (labels_match(v, ctx_.round, ctx_.l) && n_set_.contains(env.src())) {
          aggregator_.receive(env.src(), std::move(v));
        } else {
          net.note("bad_message", env.src(), kAggregatorId, kind, "label or length mismatch");
        }
      } catch (const Error& e) {
        net.note("bad_message", env.src(), kAggregatorId, kind, e.what());
      }
    }
  }

  RoundResult finish(simnet::ScenarioOutcome outcome) {
    RoundResult result;
    result.state.round = ctx_.round;
    result.state.n_set = n_set_;
    result.state.t_set = t_set_;
    result.state.m_set = agg_.m_set;
    result.state.failed_ids = agg_.failed_ids;
    result.state.aggregate = agg_.pairs;
    result.error = error_;
    result.error_message = error_message_;
    result.encoded_inputs = inputs_;
    result.transmitted_setup_elements = setup_elements_;
    result.budget_exhausted = outcome.budget_exhausted;

    const Participant* leader = nullptr;
    for (const auto& [id, p] : participants_) {
      result.participants.emplace(id, p->report());
      if (p->recovered()) ++result.recovery_events;
      if (p->committed()) result.state.u_set.insert(id);
      if (p->is_leader()) leader = p.get();
    }
    if (leader) {
      result.state.leader = leader->id();
      result.state.u_set = leader->u_view();
      result.verified = leader->accepted();
    }
    if (error_) {
      result.state.phase = phase_at_abort_;
    } else if (leader && !leader->accepted()) {
      result.state.phase = RoundPhase::kRejected;
      result.error = ErrorCode::kVerificationFailed;
      result.error_message = "aggregate failed verification";
    } else {
      result.state.phase = RoundPhase::kDone;
    }
    if (auto sum = result.released_sum()) result.decoded_sum = ctx_.codec.decode(*sum);
    result.transcript = std::move(outcome.transcript);
    return result;
  }

 private:
  void abort(Network& net, ErrorCode code, std::string message, RoundPhase at) {
    net.note("abort", kAggregatorId, kAggregatorId, std::string(error_code_name(code)), message);
    error_ = code;
    error_message_ = std::move(message);
    phase_at_abort_ = at;
    halted_ = true;
  }

  bool setup_step(Network& net) {
    switch (stage_) {
      case 0:
        for (auto& [id, p] : participants_) p->begin_setup(net);
        stage_ = 1;
        return true;
      case 1: {
        n_set_ = hello_;
        ByteWriter w;
        w.ids(n_set_);
        for (ParticipantId id : n_set_) net.send(kAggregatorId, id, msg::kRoster, w.data());
        stage_ = 2;
        return true;
      }
      case 2:
        for (auto& [id, p] : participants_) p->deal_a(net);
        stage_ = 3;
        return true;
      case 3: {
        bool zero = false;
        for (auto& [id, p] : participants_) zero |= p->auth_key_zero();
        if (zero) {
          if (++resamples_ > kMaxResamples) {
            abort(net, ErrorCode::kZeroAuthKey, "authentication key stayed zero",
                  RoundPhase::kSetup);
            return false;
          }
          for (auto& [id, p] : participants_) p->resample_auth_key(net);
          stage_ = 4;
          return true;
        }
        for (auto& [id, p] : participants_) p->finish_setup(net);
        stage_ = 5;
        return true;
      }
      case 4:
        for (auto& [id, p] : participants_) p->refresh_auth_key();
        stage_ = 3;
        return true;
      default: {
        t_set_ = setup_done_;
        if (t_set_.size() < ctx_.t) {
          abort(net, ErrorCode::kSetupQuorumFailure,
                std::to_string(t_set_.size()) + " setup-complete participants, need " +
                    std::to_string(ctx_.t),
                RoundPhase::kSetup);
          return false;
        }
        ByteWriter w;
        w.ids(t_set_);
        for (ParticipantId id : n_set_) net.send(kAggregatorId, id, msg::kSetupRoster, w.data());
        return false;
      }
    }
  }

  void aggregation_step(Network& net) {
    try {
      agg_ = aggregator_.aggregate_round(n_set_);
    } catch (const Error& e) {
      abort(net, e.code(), e.what(), RoundPhase::kAggregation);
      return;
    }
    ByteWriter w;
    w.ids(agg_.m_set);
    write_pairs(w, agg_.pairs);
    for (ParticipantId id : n_set_) net.send(kAggregatorId, id, msg::kAggregate, w.data());
  }

  bool verification_step(Network& net) {
    switch (stage_) {
      case 0:
        for (auto& [id, p] : participants_) p->commit(net);
        stage_ = 1;
        return true;
      case 1:
        for (auto& [id, p] : participants_) p->reveal(net);
        stage_ = 2;
        return true;
      case 2: {
        bool rerun = false;
        bool any = false;
        for (auto& [id, p] : participants_) {
          rerun |= !p->elect();
          any |= p->committed();
        }
        if (rerun && ++elections_ <= ctx_.n) {
          stage_ = 0;
          return true;
        }
        if (!any) {
          abort(net, ErrorCode::kRecoveryQuorumFailure, "no participant reached verification",
                RoundPhase::kVerification);
          return false;
        }
        for (auto& [id, p] : participants_) {
          if (p->is_leader()) net.note("leader", id, id, "elected");
        }
        for (auto& [id, p] : participants_) p->request_recovery(net);
        stage_ = 3;
        return true;
      }
      case 3: {
        for (auto& [id, p] : participants_) {
          if (!p->finish_recovery(net)) {
            abort(net, ErrorCode::kRecoveryQuorumFailure,
                  "participant " + std::to_string(id) + " found fewer than t recovery helpers",
                  RoundPhase::kVerification);
            return false;
          }
        }
        Participant* leader = current_leader();
        if (!leader) {
          abort(net, ErrorCode::kRecoveryQuorumFailure, "no setup-complete member is reachable",
                RoundPhase::kVerification);
          return false;
        }
        if (auto failure = leader->request_shares(net)) {
          abort(net, ErrorCode::kRecoveryQuorumFailure, *failure, RoundPhase::kVerification);
          return false;
        }
        stage_ = 4;
        return true;
      }
      default: {
        Participant* leader = current_leader();
        if (auto failure = leader->verify_aggregate(net)) {
          abort(net, ErrorCode::kRecoveryQuorumFailure, *failure, RoundPhase::kVerification);
          return false;
        }
        if (!leader->accepted()) halted_ = true;
        return false;
      }
    }
  }

  Participant* current_leader() {
    for (auto& [id, p] : participants_) {
      if (p->is_leader()) return p.get();
    }
    return nullptr;
  }

  std::size_t setup_elements_ = 0;
  Context ctx_;
  AggregatorState aggregator_;
  std::map<ParticipantId, GradientVector> inputs_;
  std::map<ParticipantId, std::unique_ptr<Participant>> participants_;

  IdSet hello_;
  IdSet setup_done_;
  IdSet n_set_;
  IdSet t_set_;
  AggregateOutput agg_;

  std::size_t stage_ = 0;
  int resamples_ = 0;
  std::size_t elections_ = 0;
  bool halted_ = false;
  std::optional<ErrorCode> error_;
  std::string error_message_;
  RoundPhase phase_at_abort_ = RoundPhase::kIdle;
};

}  // namespace

std::string_view round_phase_name(RoundPhase phase) {
  switch (phase) {
    case RoundPhase::kIdle: return "idle";
    case RoundPhase::kSetup: return "setup";
    case RoundPhase::kMasking: return "masking";
    case RoundPhase::kAggregation: return "aggregation";
    case RoundPhase::kVerification: return "verification";
    case RoundPhase::kDecryption: return "decryption";
    case RoundPhase::kDone: return "done";
    case RoundPhase::kRejected: return "rejected";
  }
  return "unknown";
}

algebra::FieldPtr RoundSpec::field() const {
  if (modulus == "default") return algebra::PrimeField::default_field();
  if (modulus == "mersenne61") return algebra::PrimeField::mersenne61();
  mpz_class p;
  if (p.set_str(modulus, 10) != 0) {
    throw Error(ErrorCode::kConfigError, "modulus '" + modulus + "' is not a decimal integer");
  }
  try {
    return algebra::PrimeField::create(p);
  } catch (const Error& e) {
    throw Error(ErrorCode::kConfigError, e.what());
  }
}

RoundSpec RoundSpec::from_json(const nlohmann::json& doc) {
  RoundSpec s;
  if (!doc.is_object()) throw Error(ErrorCode::kConfigError, "protocol must be a JSON object");
  try {
    s.threshold = doc.value("threshold", s.threshold);
    s.gradient_length = doc.value("gradient_length", s.gradient_length);
    s.s_min = doc.value("s_min", s.s_min);
    s.modulus = doc.value("modulus", s.modulus);
    s.scale_bits = doc.value("scale_bits", s.scale_bits);
    s.clip_bound = doc.value("clip_bound", s.clip_bound);
    s.tamper = parse_tamper_policy(doc.value("tamper", std::string("honest")));
    if (doc.contains("gradients")) {
      for (const auto& [key, values] : doc.at("gradients").items()) {
        s.gradients.emplace(static_cast<ParticipantId>(std::stoul(key)),
                            values.get<std::vector<double>>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfigError, e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorCode::kConfigError, e.what());
  }
  return s;
}

std::optional<std::vector<algebra::FieldElement>> RoundResult::released_sum() const {
  for (const auto& [id, report] : participants) {
    if (report.plaintext) return report.plaintext;
  }
  return std::nullopt;
}

RoundResult run_round(const simnet::SimConfig& config, const RoundSpec& spec) {
  RoundDriver driver(config, spec);
  return driver.finish(simnet::run_scenario(config, driver));
}

}  // namespace vsagg::protocol
