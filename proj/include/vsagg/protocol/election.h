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

#ifndef VSAGG_PROTOCOL_ELECTION_H_
#define VSAGG_PROTOCOL_ELECTION_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>

#include "vsagg/common/types.h"

namespace vsagg::protocol {

using CommitDigest = std::array<std::uint8_t, 32>;

// SHA-256 over (member, round, reveal).
CommitDigest commit_digest(ParticipantId member, std::uint64_t round, std::uint64_t reveal);

// The (sum of reveals mod |eligible|)-th member of `eligible` in id order.
// InvalidArgument if eligible is empty.
ParticipantId elect_leader(const IdSet& eligible,
                           const std::map<ParticipantId, std::uint64_t>& reveals);

struct ElectionOutcome {
  std::optional<ParticipantId> leader;
  // Committed members whose reveal is absent or does not match the commit.
  IdSet missing;
};

// Checks every commit against its reveal. Any mismatch leaves the leader
// unset; the caller re-runs without the members in `missing`.
ElectionOutcome run_election(const std::map<ParticipantId, CommitDigest>& commits,
                             const std::map<ParticipantId, std::uint64_t>& reveals,
                             const IdSet& eligible, std::uint64_t round);

}  // namespace vsagg::protocol

#endif  // VSAGG_PROTOCOL_ELECTION_H_
