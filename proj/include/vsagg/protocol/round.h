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

#ifndef VSAGG_PROTOCOL_ROUND_H_
#define VSAGG_PROTOCOL_ROUND_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "vsagg/algebra/field.h"
#include "vsagg/algebra/fixed_point.h"
#include "vsagg/common/error.h"
#include "vsagg/common/types.h"
#include "vsagg/maskmac/maskmac.h"
#include "vsagg/protocol/aggregator.h"
#include "vsagg/simnet/config.h"
#include "vsagg/simnet/transcript.h"

namespace vsagg::protocol {

enum class RoundPhase {
  kIdle,
  kSetup,
  kMasking,
  kAggregation,
  kVerification,
  kDecryption,
  kDone,
  kRejected,
};

std::string_view round_phase_name(RoundPhase phase);

struct RoundSpec {
  std::size_t threshold = 2;
  std::size_t gradient_length = 16;
  std::size_t s_min = 1;
  // "default" (2^130 - 5), "mersenne61", or a decimal prime.
  std::string modulus = "default";
  int scale_bits = 16;
  double clip_bound = 8.0;
  TamperPolicy tamper = TamperPolicy::kHonest;
  // Participants without an entry draw uniform values in [-clip, clip].
  std::map<ParticipantId, std::vector<double>> gradients;

  algebra::FieldPtr field() const;
  static RoundSpec from_json(const nlohmann::json& doc);
};

struct RoundState {
  std::uint64_t round = 0;
  IdSet n_set;
  IdSet t_set;
  IdSet m_set;
  IdSet u_set;
  std::vector<ParticipantId> failed_ids;
  maskmac::MaskedVector aggregate;
  RoundPhase phase = RoundPhase::kIdle;
  std::optional<ParticipantId> leader;
};

struct ParticipantReport {
  RoundPhase phase = RoundPhase::kIdle;
  bool setup_complete = false;
  bool recovered = false;
  std::optional<std::vector<algebra::FieldElement>> plaintext;
};

struct RoundResult {
  RoundState state;
  bool verified = false;
  std::optional<ErrorCode> error;
  std::string error_message;
  std::map<ParticipantId, ParticipantReport> participants;
  // The participants' inputs after encoding.
  std::map<ParticipantId, algebra::GradientVector> encoded_inputs;
  std::vector<double> decoded_sum;
  std::size_t recovery_events = 0;
  std::size_t transmitted_setup_elements = 0;
  bool budget_exhausted = false;
  simnet::Transcript transcript;

  // The plaintext released by the round, if any participant received one.
  std::optional<std::vector<algebra::FieldElement>> released_sum() const;
};

// Runs one round of Setup, Masking, Aggregation, Verification and Decryption
// over the simulated network. Protocol failures are reported in the result;
// only configuration errors throw.
RoundResult run_round(const simnet::SimConfig& config, const RoundSpec& spec);

}  // namespace vsagg::protocol

#endif  // VSAGG_PROTOCOL_ROUND_H_
