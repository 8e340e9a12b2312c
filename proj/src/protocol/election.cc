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

#include "vsagg/protocol/election.h"

#include <iterator>

#include "vsagg/common/error.h"
#include "vsagg/simnet/channel.h"
#include "vsagg/simnet/codec.h"

namespace vsagg::protocol {

CommitDigest commit_digest(ParticipantId member, std::uint64_t round, std::uint64_t reveal) {
  simnet::ByteWriter w;
  w.str("vsagg/commit/v1").u32(member).u64(round).u64(reveal);
  return simnet::sha256(w.data());
}

ParticipantId elect_leader(const IdSet& eligible,
                           const std::map<ParticipantId, std::uint64_t>& reveals) {
  if (eligible.empty()) throw Error(ErrorCode::kInvalidArgument, "no eligible leader");
  const std::uint64_t n = eligible.size();
  std::uint64_t acc = 0;
  for (const auto& [id, r] : reveals) acc = (acc + r % n) % n;
  return *std::next(eligible.begin(), static_cast<std::ptrdiff_t>(acc));
}

ElectionOutcome run_election(const std::map<ParticipantId, CommitDigest>& commits,
                             const std::map<ParticipantId, std::uint64_t>& reveals,
                             const IdSet& eligible, std::uint64_t round) {
  ElectionOutcome out;
  std::map<ParticipantId, std::uint64_t> valid;
  for (const auto& [id, digest] : commits) {
    auto it = reveals.find(id);
    if (it == reveals.end() || commit_digest(id, round, it->second) != digest) {
      out.missing.insert(id);
    } else {
      valid.emplace(id, it->second);
    }
  }
  if (out.missing.empty() && !eligible.empty()) out.leader = elect_leader(eligible, valid);
  return out;
}

}  // namespace vsagg::protocol
