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

#ifndef VSAGG_COMMON_TYPES_H_
#define VSAGG_COMMON_TYPES_H_

#include <cstdint>
#include <set>
#include <vector>

namespace vsagg {

// Participants are numbered 1..N; x = 0 is reserved for the shared secret.
using ParticipantId = std::uint32_t;

// The aggregator (edge node) is addressed as id 0 on the simulated network.
inline constexpr ParticipantId kAggregatorId = 0;

using IdSet = std::set<ParticipantId>;
using Bytes = std::vector<std::uint8_t>;

}  // namespace vsagg

#endif  // VSAGG_COMMON_TYPES_H_
