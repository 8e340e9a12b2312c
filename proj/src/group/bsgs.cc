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

#include "vsagg/group/bsgs.h"

#include <cmath>
#include <string>

#include "vsagg/common/error.h"

namespace vsagg::group {
namespace {

std::uint64_t low_word(const mpz_class& v) {
  return static_cast<std::uint64_t>(mpz_getlimbn(v.get_mpz_t(), 0));
}

std::uint64_t ceil_sqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r < n) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= n) --r;
  return r;
}

}  // namespace

BabyStepGiantStep::BabyStepGiantStep(GroupPtr group, std::uint64_t bound)
    : group_(std::move(group)), bound_(bound) {
  if (bound_ == 0 || bound_ > (std::uint64_t{1} << 40)) {
    throw Error(ErrorCode::kInvalidArgument, "bound must lie in [1, 2^40]");
  }
  m_ = ceil_sqrt(bound_);
  baby_.reserve(m_);
  index_.reserve(m_);
  GroupElement cur = group_->identity();
  for (std::uint64_t j = 0; j < m_; ++j) {
    index_.emplace(low_word(cur.value), static_cast<std::uint32_t>(j));
    baby_.push_back(cur);
    cur = group_->mul(cur, group_->generator());
  }
  // cur == G^m now.
  giant_stride_ = group_->inverse(cur);
}

std::uint64_t BabyStepGiantStep::solve(const GroupElement& h) const {
  std::uint64_t unused = 0;
  return solve(h, unused);
}

std::uint64_t BabyStepGiantStep::solve(const GroupElement& h, std::uint64_t& giant_steps) const {
  giant_steps = 0;
  GroupElement gamma = h;
  const std::uint64_t rounds = (bound_ + m_ - 1) / m_;
  for (std::uint64_t i = 0; i < rounds; ++i) {
    auto [lo, hi] = index_.equal_range(low_word(gamma.value));
    for (auto it = lo; it != hi; ++it) {
      if (baby_[it->second] == gamma) {
        const std::uint64_t x = i * m_ + it->second;
        if (x < bound_) return x;
      }
    }
    gamma = group_->mul(gamma, giant_stride_);
    ++giant_steps;
  }
  throw Error(ErrorCode::kNotFound, "no exponent below " + std::to_string(bound_));
}

std::uint64_t bsgs(const GroupPtr& group, const GroupElement& h, std::uint64_t bound) {
  return BabyStepGiantStep(group, bound).solve(h);
}

}  // namespace vsagg::group
