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

#ifndef VSAGG_SIMNET_SCENARIO_H_
#define VSAGG_SIMNET_SCENARIO_H_

#include <cstddef>

#include "vsagg/simnet/config.h"
#include "vsagg/simnet/network.h"
#include "vsagg/simnet/transcript.h"

namespace vsagg::simnet {

// A protocol driven phase by phase. Each phase is a sequence of steps; after
// every step the network runs to quiescence before the next step starts.
class ScenarioProtocol {
 public:
  virtual ~ScenarioProtocol() = default;

  // Returns false once the phase has no further steps.
  virtual bool step(Phase phase, std::size_t index, Network& net) = 0;
  virtual void deliver(const Envelope& env, Network& net) = 0;
  // Stops the scenario early (abort or rejection).
  virtual bool halted() const = 0;
};

struct ScenarioOutcome {
  Transcript transcript;
  bool budget_exhausted = false;
};

ScenarioOutcome run_scenario(const SimConfig& config, ScenarioProtocol& protocol);

}  // namespace vsagg::simnet

#endif  // VSAGG_SIMNET_SCENARIO_H_
