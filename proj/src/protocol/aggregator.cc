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

#include "vsagg/protocol/aggregator.h"

#include <string>

#include "vsagg/common/error.h"

namespace vsagg::protocol {
namespace {

struct PolicyName {
  TamperPolicy policy;
  std::string_view name;
};

constexpr PolicyName kPolicyNames[] = {
    {TamperPolicy::kHonest, "honest"},
    {TamperPolicy::kFlipElement, "flip_element"},
    {TamperPolicy::kSubstituteAll, "substitute_all"},
    {TamperPolicy::kInjectOffset, "inject_offset"},
};

}  // namespace

std::string_view tamper_policy_name(TamperPolicy policy) {
  for (const auto& p : kPolicyNames) {
    if (p.policy == policy) return p.name;
  }
  return "unknown";
}

TamperPolicy parse_tamper_policy(std::string_view name) {
  for (const auto& p : kPolicyNames) {
    if (p.name == name) return p.policy;
  }
  throw Error(ErrorCode::kConfigError, "unknown tamper policy '" + std::string(name) + "'");
}

maskmac::MaskedVector apply_tamper(maskmac::MaskedVector agg, TamperPolicy policy,
                                   const algebra::FieldElement& offset, Rng& rng) {
  if (agg.empty()) return agg;
  switch (policy) {
    case TamperPolicy::kHonest:
      break;
    case TamperPolicy::kFlipElement:
      agg.front().c1 += agg.front().c1.field()->one();
      break;
    case TamperPolicy::kSubstituteAll:
      for (auto& pair : agg) {
        pair.c1 = pair.c1.field()->random(rng);
        pair.c2 = pair.c2.field()->random(rng);
      }
      break;
    case TamperPolicy::kInjectOffset:
      for (auto& pair : agg) pair.c1 += offset;
      break;
  }
  return agg;
}

AggregatorState::AggregatorState(std::size_t s_min, TamperPolicy policy,
                                 algebra::FieldElement offset, Rng rng)
    : s_min_(s_min), policy_(policy), offset_(std::move(offset)), rng_(std::move(rng)) {
  if (s_min_ < 1) throw Error(ErrorCode::kConfigError, "s_min must be at least 1");
}

void AggregatorState::receive(ParticipantId from, maskmac::MaskedVector masked) {
  received_.emplace(from, std::move(masked));
}

AggregateOutput AggregatorState::aggregate_round(const IdSet& n_set) {
  if (received_.size() < s_min_) {
    throw Error(ErrorCode::kStalenessTimeout, std::to_string(received_.size()) +
                                                  " submissions, need " +
                                                  std::to_string(s_min_));
  }
  AggregateOutput out;
  std::vector<maskmac::MaskedVector> vectors;
  for (const auto& [id, v] : received_) {
    out.m_set.insert(id);
    vectors.push_back(v);
  }
  for (ParticipantId id : n_set) {
    if (!out.m_set.contains(id)) out.failed_ids.push_back(id);
  }
  out.pairs = apply_tamper(maskmac::aggregate_vectors(vectors), policy_, offset_, rng_);
  return out;
}

}  // namespace vsagg::protocol
