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

#ifndef VSAGG_GROUP_BSGS_H_
#define VSAGG_GROUP_BSGS_H_

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "vsagg/group/group.h"

namespace vsagg::group {

// Baby-step giant-step decoder for small exponents: finds x in [0, bound)
// with G^x = h. The baby-step table holds ceil(sqrt(bound)) elements and is
// read-only after construction, so one instance can serve many queries.
class BabyStepGiantStep {
 public:
  // bound must lie in [1, 2^40].
  BabyStepGiantStep(GroupPtr group, std::uint64_t bound);

  std::uint64_t bound() const { return bound_; }
  std::uint64_t table_size() const { return m_; }

  // NotFound if no exponent below bound matches (overflowed sum or tampering).
  std::uint64_t solve(const GroupElement& h) const;

  // As solve(), also reporting the number of group multiplications spent on
  // the giant-step walk.
  std::uint64_t solve(const GroupElement& h, std::uint64_t& giant_steps) const;

 private:
  GroupPtr group_;
  std::uint64_t bound_;
  std::uint64_t m_;
  std::vector<GroupElement> baby_;
  // Low 64 bits of the element -> table index; collisions resolved by exact
  // comparison against baby_.
  std::unordered_multimap<std::uint64_t, std::uint32_t> index_;
  GroupElement giant_stride_;  // G^{-m}
};

// One-shot helper: builds the table and solves.
std::uint64_t bsgs(const GroupPtr& group, const GroupElement& h, std::uint64_t bound);

}  // namespace vsagg::group

#endif  // VSAGG_GROUP_BSGS_H_
