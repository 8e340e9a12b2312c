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

#ifndef VSAGG_SIMNET_TRANSCRIPT_H_
#define VSAGG_SIMNET_TRANSCRIPT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vsagg/common/types.h"

namespace vsagg::simnet {

// event is one of send, deliver, drop, late, auth_fail, or a protocol note
// (phase, lose_shares, recovery, leader, verdict, abort).
struct TranscriptRecord {
  std::uint64_t time = 0;
  std::string event;
  ParticipantId src = 0;
  ParticipantId dst = 0;
  std::string kind;
  std::string digest;
  std::string detail;

  bool operator==(const TranscriptRecord&) const = default;
};

class Transcript {
 public:
  void append(TranscriptRecord record) { records_.push_back(std::move(record)); }

  const std::vector<TranscriptRecord>& records() const { return records_; }
  std::size_t count(std::string_view event) const;
  std::size_t count(std::string_view event, std::string_view kind) const;

  // One JSON object per line.
  std::string to_ndjson() const;
  void write(const std::string& path) const;

 private:
  std::vector<TranscriptRecord> records_;
};

}  // namespace vsagg::simnet

#endif  // VSAGG_SIMNET_TRANSCRIPT_H_
