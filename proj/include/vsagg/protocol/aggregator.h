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

#ifndef VSAGG_PROTOCOL_AGGREGATOR_H_
#define VSAGG_PROTOCOL_AGGREGATOR_H_

#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

#include "vsagg/algebra/field.h"
#include "vsagg/common/random.h"
#include "vsagg/common/types.h"
#include "vsagg/maskmac/maskmac.h"

namespace vsagg::protocol {

// Aggregator behaviour for adversarial testing. flip_element adds one to the
// first c1; substitute_all replaces every pair with uniform values;
// inject_offset adds a fixed encoded offset to every c1.
enum class TamperPolicy { kHonest, kFlipElement, kSubstituteAll, kInjectOffset };

std::string_view tamper_policy_name(TamperPolicy policy);
TamperPolicy parse_tamper_policy(std::string_view name);

maskmac::MaskedVector apply_tamper(maskmac::MaskedVector agg, TamperPolicy policy,
                                   const algebra::FieldElement& offset, Rng& rng);

struct AggregateOutput {
  IdSet m_set;
  std::vector<ParticipantId> failed_ids;
  maskmac::MaskedVector pairs;
};

class AggregatorState {
 public:
  AggregatorState(std::size_t s_min, TamperPolicy policy, algebra::FieldElement offset, Rng rng);

  // Keeps the first submission per participant.
  void receive(ParticipantId from, maskmac::MaskedVector masked);
  const std::map<ParticipantId, maskmac::MaskedVector>& received() const { return received_; }
  std::size_t s_min() const { return s_min_; }
  TamperPolicy policy() const { return policy_; }

  // Sums exactly the received vectors and applies the tamper policy.
  // StalenessTimeout with fewer than s_min submissions.
  AggregateOutput aggregate_round(const IdSet& n_set);

 private:
  std::size_t s_min_;
  TamperPolicy policy_;
  algebra::FieldElement offset_;
  Rng rng_;
  std::map<ParticipantId, maskmac::MaskedVector> received_;
};

}  // namespace vsagg::protocol

#endif  // VSAGG_PROTOCOL_AGGREGATOR_H_
