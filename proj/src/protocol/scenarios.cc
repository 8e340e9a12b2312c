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

#include "vsagg/protocol/scenarios.h"

namespace vsagg::protocol {

Scenario dropout_recovery_scenario(std::uint64_t seed, bool remove_setup_member) {
  using simnet::FaultAction;
  using simnet::Phase;
  Scenario s;
  s.config.seed = seed;
  s.config.participants = 7;
  s.config.faults = {
      {4, Phase::kSetup, FaultAction::kLoseShares},
      {5, Phase::kSetup, FaultAction::kLoseShares},
      {6, Phase::kSetup, FaultAction::kLoseShares},
      {7, Phase::kSetup, FaultAction::kLoseShares},
      {3, Phase::kMasking, FaultAction::kDropOutbound},
      {6, Phase::kMasking, FaultAction::kDisconnect},
      {7, Phase::kMasking, FaultAction::kDisconnect},
  };
  if (remove_setup_member) {
    s.config.faults.push_back({2, Phase::kVerification, FaultAction::kDisconnect});
  }
  s.spec.threshold = 3;
  s.spec.gradient_length = 8;
  return s;
}

}  // namespace vsagg::protocol
