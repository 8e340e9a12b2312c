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

#ifndef VSAGG_SIMNET_CONFIG_H_
#define VSAGG_SIMNET_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "vsagg/common/types.h"

namespace vsagg::simnet {

enum class Phase { kSetup, kMasking, kAggregation, kVerification, kDecryption };

inline constexpr Phase kAllPhases[] = {Phase::kSetup, Phase::kMasking, Phase::kAggregation,
                                       Phase::kVerification, Phase::kDecryption};

std::string_view phase_name(Phase phase);
Phase parse_phase(std::string_view name);

// lose_shares: the participant completes Setup but discards every received
// share and its own s_v at the end of the phase (a reboot with stale storage).
enum class FaultAction { kDropOutbound, kDisconnect, kReconnect, kLoseShares };

std::string_view fault_action_name(FaultAction action);
FaultAction parse_fault_action(std::string_view name);

struct FaultEvent {
  ParticipantId participant = 0;
  Phase phase = Phase::kSetup;
  FaultAction action = FaultAction::kDisconnect;
};

struct DelayModel {
  std::uint64_t min = 1;
  std::uint64_t max = 10;
};

struct SimConfig {
  std::uint64_t seed = 1;
  std::uint32_t participants = 3;
  std::uint64_t round = 1;
  DelayModel delay;
  std::uint64_t phase_budget = 1000;
  std::vector<FaultEvent> faults;

  // ConfigError on unknown phases/actions, out-of-range ids or bad delays.
  void validate() const;

  static SimConfig from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;
};

}  // namespace vsagg::simnet

#endif  // VSAGG_SIMNET_CONFIG_H_
