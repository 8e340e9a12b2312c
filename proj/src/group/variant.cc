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

#include "vsagg/group/variant.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "vsagg/common/error.h"

namespace vsagg::group {

GroupElement group_mask(const SchnorrGroup& group, const Prg& prg, const FieldElement& w,
                        const FieldElement& masking_key, const RoundLabel& label) {
  return group.exp(maskmac::mask(prg, w, masking_key, label));
}

GroupElement group_tag(const SchnorrGroup& group, const Prg& prg, const FieldElement& c1,
                       const FieldElement& mac_key, const AuthKey& s, const RoundLabel& label) {
  return group.exp(maskmac::tag(prg, c1, mac_key, s, label));
}

GroupMaskedPair group_mask_and_tag(const SchnorrGroup& group, const Prg& prg,
                                   const FieldElement& w, const FieldElement& masking_key,
                                   const FieldElement& mac_key, const AuthKey& s,
                                   const RoundLabel& label) {
  const FieldElement c1 = maskmac::mask(prg, w, masking_key, label);
  const FieldElement c2 = maskmac::tag(prg, c1, mac_key, s, label);
  return {group.exp(c1), group.exp(c2), label};
}

GroupMaskedPair group_aggregate(const SchnorrGroup& group,
                                std::span<const GroupMaskedPair> pairs) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyAggregate, "nothing to aggregate");
  GroupMaskedPair acc = pairs.front();
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i].label != acc.label) {
      throw Error(ErrorCode::kLabelMismatch, "pairs carry different labels");
    }
    acc.c1 = group.mul(acc.c1, pairs[i].c1);
    acc.c2 = group.mul(acc.c2, pairs[i].c2);
  }
  return acc;
}

GroupElement prg_in_exponent(const SchnorrGroup& group, const Prg& prg,
                             const GroupElement& key_commitment, const RoundLabel& label) {
  return group.pow(key_commitment, prg.point(label));
}

bool group_verify(const SchnorrGroup& group, const GroupMaskedPair& agg, const AuthKey& s,
                  const GroupElement& expected, const RoundLabel& label) {
  if (agg.label != label) return false;
  return group.mul(group.pow(agg.c2, s.value()), agg.c1) == expected;
}

GroupElement group_unmask(const SchnorrGroup& group, const Prg& prg, const GroupMaskedPair& agg,
                          const GroupElement& v0_commitment) {
  const GroupElement pad = prg_in_exponent(group, prg, v0_commitment, agg.label);
  return group.mul(agg.c1, group.inverse(pad));
}

GroupSession::GroupSession(GroupPtr group, GroupVariantParams params)
    : group_(std::move(group)),
      params_(params),
      prg_(group_->exponent_field()),
      rng_(params.seed, 0x67726f7570ULL) {
  const std::size_t n = params_.parties;
  const std::size_t t = params_.threshold;
  if (t < 1 || t > n) throw Error(ErrorCode::kThresholdTooLarge, "need 1 <= t <= N");
  const FieldPtr& zq = group_->exponent_field();

  std::vector<ParticipantId> ids;
  for (ParticipantId i = 1; i <= n; ++i) ids.push_back(i);
  for (ParticipantId i : ids) {
    keys_.emplace(i, KeyPair::generate(*group_, rng_));
    dealers_.emplace(i, sharing::DealerState(i, t, zq, rng_));
  }

  // The one-time Setup runs the two-step dealing; holders keep only the
  // wrapped forms.
  std::map<ParticipantId, sharing::ShareBundle> bundles;
  for (ParticipantId i : ids) bundles.emplace(i, sharing::ShareBundle(i));
  for (ParticipantId i : ids) {
    const auto& d = dealers_.at(i);
    for (const auto& share : d.deal_round1(ids)) bundles.at(share.holder).receive(share);
    for (ParticipantId j : ids) {
      wrapped_v_[j][i] = wrap_share(*group_, d.v_poly().eval(j), keys_.at(j).pk);
    }
  }
  for (ParticipantId i : ids) {
    auto& d = dealers_.at(i);
    d.accumulate_sv(bundles.at(i), ids);
    d.deal_round2(ids, rng_);
    for (ParticipantId j : ids) {
      wrapped_a_[j][i] = wrap_share(*group_, d.a_poly()->eval(j), keys_.at(j).pk);
    }
  }
  setup_runs_ = 1;
}

std::uint64_t GroupSession::encoded_span() const {
  return 2 * static_cast<std::uint64_t>(std::llround(std::ldexp(params_.clip_bound, params_.scale_bits)));
}

std::int64_t GroupSession::encode(double v) const {
  const double clipped = std::isnan(v) ? 0.0 : std::clamp(v, -params_.clip_bound, params_.clip_bound);
  const std::int64_t offset = std::llround(std::ldexp(params_.clip_bound, params_.scale_bits));
  return std::llround(std::ldexp(clipped, params_.scale_bits)) + offset;
}

GroupElement GroupSession::unwrapped_v_share(ParticipantId dealer, ParticipantId holder) const {
  return unwrap_share(*group_, wrapped_v_.at(holder).at(dealer), keys_.at(holder).sk);
}

GroupElement GroupSession::commitment_at(ParticipantId dealer, ParticipantId x,
                                         const IdSet& holders) const {
  std::vector<ExpPoint> points;
  for (ParticipantId h : holders) {
    if (points.size() == params_.threshold) break;
    points.emplace_back(h, unwrapped_v_share(dealer, h));
  }
  if (points.size() < params_.threshold) {
    throw Error(ErrorCode::kRecoveryQuorumFailure,
                "dealer " + std::to_string(dealer) + " has " + std::to_string(points.size()) +
                    " online holders, need " + std::to_string(params_.threshold));
  }
  return exp_lagrange_at(*group_, points, x, params_.threshold);
}

GroupElement GroupSession::recover_sv_commitment(ParticipantId q, const IdSet& helpers) const {
  std::vector<ExpPoint> points;
  for (ParticipantId j : helpers) {
    if (j == q) continue;
    points.emplace_back(j, unwrap_share(*group_, wrapped_a_.at(j).at(q), keys_.at(j).sk));
  }
  return exp_lagrange_at_zero(*group_, points, params_.threshold);
}

const FieldElement& GroupSession::setup_sv(ParticipantId q) const {
  return *dealers_.at(q).s_v();
}

GroupRoundResult GroupSession::run_round(
    std::uint64_t round, const std::map<ParticipantId, std::vector<double>>& contributions,
    const IdSet& online, const std::function<void(std::vector<GroupMaskedPair>&)>& tamper) {
  if (contributions.empty()) throw Error(ErrorCode::kEmptyAggregate, "no contributions");
  const std::size_t length = contributions.begin()->second.size();
  const FieldPtr& zq = group_->exponent_field();
  if (contributions.size() * encoded_span() >= (std::uint64_t{1} << 32)) {
    throw Error(ErrorCode::kCapacityExceeded, "per-element sum may reach 2^32");
  }
  GroupRoundResult result;
  result.round = round;

  // Fresh partial authentication keys every round; resample on s = 0.
  std::optional<AuthKey> s;
  while (!s) {
    std::vector<FieldElement> partials;
    for (auto& [id, d] : dealers_) {
      d.set_partial_auth_key(zq->random(rng_));
      partials.push_back(d.partial_auth_key());
    }
    try {
      s.emplace(AuthKey::from_partials(partials));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kZeroAuthKey) throw;
    }
  }

  // Masking.
  std::vector<std::vector<GroupMaskedPair>> submitted;
  for (const auto& [id, w] : contributions) {
    if (!dealers_.contains(id)) throw Error(ErrorCode::kInvalidArgument, "unknown participant");
    if (w.size() != length) throw Error(ErrorCode::kInvalidArgument, "vector lengths differ");
    const auto& d = dealers_.at(id);
    std::vector<GroupMaskedPair> pairs;
    pairs.reserve(length);
    for (std::size_t e = 0; e < length; ++e) {
      pairs.push_back(group_mask_and_tag(*group_, prg_, zq->element(encode(w[e])),
                                         d.masking_secret(), d.mac_key(), *s, {round, e}));
    }
    submitted.push_back(std::move(pairs));
    result.contributors.insert(id);
  }

  // Aggregation.
  std::vector<GroupMaskedPair> agg;
  agg.reserve(length);
  for (std::size_t e = 0; e < length; ++e) {
    std::vector<GroupMaskedPair> column;
    for (const auto& v : submitted) column.push_back(v[e]);
    agg.push_back(group_aggregate(*group_, column));
  }
  if (tamper) tamper(agg);

  // Verification: online members of [M] publish G^{k_i}; the rest are rebuilt
  // from holders' unwrapped shares.
  IdSet holders;
  for (ParticipantId h : online) {
    if (dealers_.contains(h)) holders.insert(h);
  }
  GroupElement key_product = group_->identity();
  for (ParticipantId i : result.contributors) {
    if (online.contains(i)) {
      key_product = group_->mul(key_product, group_->exp(dealers_.at(i).mac_key()));
    } else {
      key_product = group_->mul(key_product, commitment_at(i, i, holders));
      ++result.recovered_commitments;
    }
  }
  for (std::size_t e = 0; e < length; ++e) {
    const RoundLabel label{round, e};
    const GroupElement expected = prg_in_exponent(*group_, prg_, key_product, label);
    if (!group_verify(*group_, agg[e], *s, expected, label)) {
      result.verified = false;
      return result;
    }
  }
  result.verified = true;

  // Decryption.
  GroupElement v0 = group_->identity();
  for (ParticipantId i : result.contributors) v0 = group_->mul(v0, commitment_at(i, 0, holders));
  const std::uint64_t m = result.contributors.size();
  const std::uint64_t bound = m * encoded_span() + 1;
  const BabyStepGiantStep decoder(group_, bound);
  const auto offset = static_cast<std::int64_t>(encoded_span() / 2);
  for (std::size_t e = 0; e < length; ++e) {
    GroupElement h = group_unmask(*group_, prg_, agg[e], v0);
    const auto x = static_cast<std::int64_t>(decoder.solve(h));
    const std::int64_t fixed = x - static_cast<std::int64_t>(m) * offset;
    result.exponent_sum.push_back(std::move(h));
    result.fixed_point_sum.push_back(fixed);
    result.decoded_sum.push_back(std::ldexp(static_cast<double>(fixed), -params_.scale_bits));
  }
  return result;
}

}  // namespace vsagg::group
