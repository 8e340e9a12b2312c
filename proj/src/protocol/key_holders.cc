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

#include "vsagg/protocol/key_holders.h"

namespace vsagg::protocol {

void KeyHolderIndex::record(ParticipantId dealer, ParticipantId holder) {
  holders_[dealer].insert(holder);
}

KeyHolderIndex KeyHolderIndex::after_setup(const IdSet& dealers, const IdSet& complete_holders) {
  KeyHolderIndex index;
  for (ParticipantId d : dealers) {
    for (ParticipantId h : complete_holders) index.record(d, h);
  }
  return index;
}

const IdSet& KeyHolderIndex::holders_of(ParticipantId dealer) const {
  static const IdSet kEmpty;
  auto it = holders_.find(dealer);
  return it == holders_.end() ? kEmpty : it->second;
}

std::size_t KeyHolderIndex::available(ParticipantId dealer, const IdSet& alive) const {
  std::size_t n = 0;
  for (ParticipantId h : holders_of(dealer)) n += alive.contains(h) ? 1 : 0;
  return n;
}

}  // namespace vsagg::protocol
