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

#ifndef VSAGG_GROUP_VARIANT_H_
#define VSAGG_GROUP_VARIANT_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "vsagg/algebra/polynomial.h"
#include "vsagg/group/bsgs.h"
#include "vsagg/group/group.h"
#include "vsagg/maskmac/maskmac.h"
#include "vsagg/sharing/sharing.h"

namespace vsagg::group {

using maskmac::AuthKey;
using maskmac::Prg;
using maskmac::RoundLabel;

// (G^{c1}, G^{c2}) for one element.
struct GroupMaskedPair {
  GroupElement c1;
  GroupElement c2;
  RoundLabel label;
};

// G^{mask(w, V_i(0), label)}; prg must be defined over Z_q.
GroupElement group_mask(const SchnorrGroup& group, const Prg& prg, const FieldElement& w,
                        const FieldElement& masking_key, const RoundLabel& label);
// G^{tag(c1, k_i, s, label)} for the scalar c1 the participant holds.
GroupElement group_tag(const SchnorrGroup& group, const Prg& prg, const FieldElement& c1,
                       const FieldElement& mac_key, const AuthKey& s, const RoundLabel& label);
GroupMaskedPair group_mask_and_tag(const SchnorrGroup& group, const Prg& prg,
                                   const FieldElement& w, const FieldElement& masking_key,
                                   const FieldElement& mac_key, const AuthKey& s,
                                   const RoundLabel& label);

// Componentwise product. EmptyAggregate / LabelMismatch as for scalars.
GroupMaskedPair group_aggregate(const SchnorrGroup& group, std::span<const GroupMaskedPair> pairs);

// G^{PRG(k, label)} from the public G^k: (G^k)^{H(label)}.
GroupElement prg_in_exponent(const SchnorrGroup& group, const Prg& prg,
                             const GroupElement& key_commitment, const RoundLabel& label);

// c2^s * c1 == expected, where expected = G^{sum PRG(k_i, label)}.
bool group_verify(const SchnorrGroup& group, const GroupMaskedPair& agg, const AuthKey& s,
                  const GroupElement& expected, const RoundLabel& label);

// c1 / G^{PRG(V0, label)} = G^{sum w}; `v0_commitment` is G^{V0}.
GroupElement group_unmask(const SchnorrGroup& group, const Prg& prg, const GroupMaskedPair& agg,
                          const GroupElement& v0_commitment);

// Parameters of the reusable-setup variant. Values are encoded with an offset
// of clip * 2^scale_bits so every per-element sum is non-negative and the
// aggregate fits the BSGS bound.
struct GroupVariantParams {
  std::size_t parties = 5;
  std::size_t threshold = 3;
  int scale_bits = 10;
  double clip_bound = 8.0;
  std::uint64_t seed = 1;
};

struct GroupRoundResult {
  std::uint64_t round = 0;
  bool verified = false;
  IdSet contributors;
  // Sum of fixed-point integers (offset removed) and its real decoding.
  std::vector<std::int64_t> fixed_point_sum;
  std::vector<double> decoded_sum;
  // G^{sum w} per element, before BSGS.
  std::vector<GroupElement> exponent_sum;
  // k_i commitments rebuilt from holders because i was offline.
  std::size_t recovered_commitments = 0;
};

// Reusable-setup pipeline: Setup (wrapped V- and A-shares under each
// recipient's public key) runs once at construction; every round draws fresh
// s_i and reuses the wrapped shares. Holders only ever reveal unwrapped group
// elements G^{V_i(h)}, never the scalars.
class GroupSession {
 public:
  GroupSession(GroupPtr group, GroupVariantParams params);

  const GroupVariantParams& params() const { return params_; }
  const SchnorrGroup& group() const { return *group_; }
  std::size_t setup_runs() const { return setup_runs_; }

  // Largest per-element value of a single encoded contribution.
  std::uint64_t encoded_span() const;
  std::int64_t encode(double v) const;

  // Runs Masking..Decryption. `contributions` is [M] with each member's
  // vector; `online` is the set present at verification (members of [M]
  // outside it have their G^{k_i} rebuilt from holders). When `tamper` is set
  // it is applied to the aggregate before verification.
  GroupRoundResult run_round(std::uint64_t round,
                             const std::map<ParticipantId, std::vector<double>>& contributions,
                             const IdSet& online,
                             const std::function<void(std::vector<GroupMaskedPair>&)>& tamper = {});

  // G^{V_i(h)} as unwrapped by holder h.
  GroupElement unwrapped_v_share(ParticipantId dealer, ParticipantId holder) const;
  // G^{s_{v_q}} rebuilt from t unwrapped A-form shares G^{A_q(j)}.
  GroupElement recover_sv_commitment(ParticipantId q, const IdSet& helpers) const;
  // Test hook: the scalar s_{v_q} fixed during Setup.
  const FieldElement& setup_sv(ParticipantId q) const;
  const KeyPair& keys(ParticipantId id) const { return keys_.at(id); }
  const sharing::DealerState& dealer(ParticipantId id) const { return dealers_.at(id); }

 private:
  GroupElement commitment_at(ParticipantId dealer, ParticipantId x, const IdSet& holders) const;

  GroupPtr group_;
  GroupVariantParams params_;
  Prg prg_;
  Rng rng_;
  std::size_t setup_runs_ = 0;
  std::map<ParticipantId, KeyPair> keys_;
  std::map<ParticipantId, sharing::DealerState> dealers_;
  // holder -> dealer -> wrapped value.
  std::map<ParticipantId, std::map<ParticipantId, GroupElement>> wrapped_v_;
  std::map<ParticipantId, std::map<ParticipantId, GroupElement>> wrapped_a_;
};

}  // namespace vsagg::group

#endif  // VSAGG_GROUP_VARIANT_H_
