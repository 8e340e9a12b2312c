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

#include "vsagg/simnet/scenario.h"

#include <string>

namespace vsagg::simnet {

ScenarioOutcome run_scenario(const SimConfig& config, ScenarioProtocol& protocol) {
  ScenarioOutcome out;
  Network net(config, out.transcript);
  const auto deliver = [&](const Envelope& env) { protocol.deliver(env, net); };
  for (Phase phase : kAllPhases) {
    net.begin_phase(phase);
    net.note("phase", 0, 0, std::string(phase_name(phase)));
    for (std::size_t i = 0; !protocol.halted(); ++i) {
      const bool more = protocol.step(phase, i, net);
      net.run(deliver);
      if (!more) break;
    }
    if (protocol.halted()) break;
  }
  out.budget_exhausted = net.budget_exhausted();
  return out;
}

}  // namespace vsagg::simnet
