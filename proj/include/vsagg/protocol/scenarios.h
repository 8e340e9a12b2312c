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

#ifndef VSAGG_PROTOCOL_SCENARIOS_H_
#define VSAGG_PROTOCOL_SCENARIOS_H_

#include <cstdint>

#include "vsagg/protocol/round.h"
#include "vsagg/simnet/config.h"

namespace vsagg::protocol {

struct Scenario {
  simnet::SimConfig config;
  RoundSpec spec;
};

// Seven participants, t = 3. Participants 1-3 complete Setup; 4-7 lose their
// shares at the end of Setup. 6 and 7 disconnect in Masking and 3's masked
// vector is dropped, so 1, 2, 4, 5 contribute; 4 and 5 come back for
// Verification and recover their shares from 1-3. With
// `remove_setup_member`, participant 2 disconnects at Verification and only
// two helpers remain.
Scenario dropout_recovery_scenario(std::uint64_t seed = 3, bool remove_setup_member = false);

}  // namespace vsagg::protocol

#endif  // VSAGG_PROTOCOL_SCENARIOS_H_
