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

#ifndef VSAGG_PROTOCOL_KEY_HOLDERS_H_
#define VSAGG_PROTOCOL_KEY_HOLDERS_H_

#include <cstddef>
#include <map>

#include "vsagg/common/types.h"

namespace vsagg::protocol {

// Which participants hold an evaluation V_i(holder) of each dealer's masking
// polynomial, so recovery quorums can be checked before contacting anyone.
class KeyHolderIndex {
 public:
  void record(ParticipantId dealer, ParticipantId holder);

  // Every setup-complete holder has one V-evaluation per dealer, its own
  // included.
  static KeyHolderIndex after_setup(const IdSet& dealers, const IdSet& complete_holders);

  const IdSet& holders_of(ParticipantId dealer) const;
  std::size_t available(ParticipantId dealer, const IdSet& alive) const;
  bool has_quorum(ParticipantId dealer, std::size_t t, const IdSet& alive) const {
    return available(dealer, alive) >= t;
  }

 private:
  std::map<ParticipantId, IdSet> holders_;
};

}  // namespace vsagg::protocol

#endif  // VSAGG_PROTOCOL_KEY_HOLDERS_H_
