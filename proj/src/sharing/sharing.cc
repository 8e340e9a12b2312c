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

#include "vsagg/sharing/sharing.h"

#include <algorithm>
#include <string>

#include "vsagg/common/error.h"

namespace vsagg::sharing {
namespace {

void check_ids(std::span<const ParticipantId> ids) {
  for (ParticipantId id : ids) {
    if (id == 0) throw Error(ErrorCode::kInvalidArgument, "participant ids start at 1");
  }
}

std::vector<algebra::Point> to_points(const ShareMap& shares) {
  if (shares.empty()) throw Error(ErrorCode::kInsufficientShares, "no shares");
  const FieldPtr& field = shares.begin()->second.field();
  std::vector<algebra::Point> points;
  points.reserve(shares.size());
  for (const auto& [id, value] : shares) {
    if (id == 0) throw Error(ErrorCode::kInvalidArgument, "share at x = 0");
    points.push_back({field->element(static_cast<std::int64_t>(id)), value});
  }
  return points;
}

}  // namespace

std::vector<Share> deal_direct(ParticipantId dealer, const SymBivarPoly& f,
                               std::span<const ParticipantId> recipients) {
  check_ids(recipients);
  const bool dealer_listed =
      std::find(recipients.begin(), recipients.end(), dealer) != recipients.end();
  const std::size_t n = recipients.size() + (dealer_listed ? 0 : 1);
  if (f.threshold() > n) {
    throw Error(ErrorCode::kThresholdTooLarge,
                "t = " + std::to_string(f.threshold()) + " exceeds N = " + std::to_string(n));
  }
  std::vector<Share> out;
  out.reserve(recipients.size());
  for (ParticipantId j : recipients) {
    if (j == dealer) continue;
    out.push_back({dealer, j, ShareKind::kBivarRow,
                   f.row(f.field()->element(static_cast<std::int64_t>(j)))});
  }
  return out;
}

void ShareBundle::receive(const Share& share) {
  if (share.holder != holder_) {
    throw Error(ErrorCode::kInvalidArgument, "share addressed to another holder");
  }
  switch (share.kind) {
    case ShareKind::kV: received_v_.insert_or_assign(share.dealer, share.scalar()); break;
    case ShareKind::kA: received_a_.insert_or_assign(share.dealer, share.scalar()); break;
    case ShareKind::kBivarRow:
      throw Error(ErrorCode::kInvalidArgument, "bivariate rows are not bundled");
  }
}

std::optional<FieldElement> ShareBundle::v_from(ParticipantId dealer) const {
  auto it = received_v_.find(dealer);
  if (it == received_v_.end()) return std::nullopt;
  return it->second;
}

std::optional<FieldElement> ShareBundle::a_from(ParticipantId dealer) const {
  auto it = received_a_.find(dealer);
  if (it == received_a_.end()) return std::nullopt;
  return it->second;
}

bool ShareBundle::has_v_from_all(std::span<const ParticipantId> dealers) const {
  for (ParticipantId d : dealers) {
    if (d != holder_ && !received_v_.contains(d)) return false;
  }
  return true;
}

bool ShareBundle::has_a_from_all(std::span<const ParticipantId> dealers) const {
  for (ParticipantId d : dealers) {
    if (d != holder_ && !received_a_.contains(d)) return false;
  }
  return true;
}

void ShareBundle::clear() {
  received_v_.clear();
  received_a_.clear();
}

DealerState::DealerState(ParticipantId id, std::size_t t, const FieldPtr& field, Rng& rng)
    : id_(id),
      t_(t),
      v_poly_(UniPoly::random(field, t - 1, field->random(rng), rng)),
      partial_auth_key_(field->random(rng)) {
  if (id == 0) throw Error(ErrorCode::kInvalidArgument, "participant ids start at 1");
  if (t == 0) throw Error(ErrorCode::kInvalidArgument, "threshold must be positive");
}

DealerState::DealerState(ParticipantId id, std::size_t t, UniPoly v_poly,
                         FieldElement partial_auth_key)
    : id_(id), t_(t), v_poly_(std::move(v_poly)), partial_auth_key_(std::move(partial_auth_key)) {
  if (id == 0) throw Error(ErrorCode::kInvalidArgument, "participant ids start at 1");
  if (t == 0 || v_poly_.degree() + 1 != t) {
    throw Error(ErrorCode::kInvalidArgument, "V polynomial must have degree t-1");
  }
}

std::vector<Share> DealerState::deal_round1(std::span<const ParticipantId> recipients) const {
  check_ids(recipients);
  std::vector<Share> out;
  out.reserve(recipients.size());
  for (ParticipantId j : recipients) {
    if (j == id_) continue;
    out.push_back({id_, j, ShareKind::kV, v_poly_.eval(j)});
  }
  return out;
}

const FieldElement& DealerState::accumulate_sv(const ShareBundle& bundle,
                                               std::span<const ParticipantId> dealers) {
  FieldElement acc = v_poly_.eval(id_);
  for (ParticipantId d : dealers) {
    if (d == id_) continue;
    auto v = bundle.v_from(d);
    if (!v) {
      throw Error(ErrorCode::kMissingStep1Share,
                  "holder " + std::to_string(id_) + " lacks V_" + std::to_string(d));
    }
    acc += *v;
  }
  s_v_ = std::move(acc);
  return *s_v_;
}

std::vector<Share> DealerState::deal_round2(std::span<const ParticipantId> recipients,
                                            Rng& rng) {
  if (!s_v_) throw Error(ErrorCode::kMissingStep1Share, "s_v not yet accumulated");
  return deal_round2(recipients, UniPoly::random(field(), t_ - 1, *s_v_, rng));
}

std::vector<Share> DealerState::deal_round2(std::span<const ParticipantId> recipients,
                                            UniPoly a_poly) {
  check_ids(recipients);
  if (!s_v_) throw Error(ErrorCode::kMissingStep1Share, "s_v not yet accumulated");
  if (a_poly.degree() + 1 != t_ || a_poly.constant() != *s_v_) {
    throw Error(ErrorCode::kInvalidArgument, "A polynomial must have degree t-1 and A(0) = s_v");
  }
  a_poly_ = std::move(a_poly);
  std::vector<Share> out;
  out.reserve(recipients.size());
  for (ParticipantId j : recipients) {
    if (j == id_) continue;
    out.push_back({id_, j, ShareKind::kA, a_poly_->eval(j)});
  }
  return out;
}

void DealerState::forget_setup_material() {
  s_v_.reset();
  a_poly_.reset();
}

FieldElement reconstruct_secret(const ShareMap& shares, std::size_t t) {
  const auto points = to_points(shares);
  return algebra::lagrange_at_zero(points, t);
}

FieldElement reconstruct_at(const ShareMap& shares, ParticipantId x, std::size_t t) {
  const auto points = to_points(shares);
  return algebra::lagrange_at(points, points.front().x.field()->element(static_cast<std::int64_t>(x)),
                              t);
}

FieldElement recover_lost_share(ParticipantId q, const ShareMap& helper_shares, std::size_t t) {
  if (helper_shares.contains(q)) {
    throw Error(ErrorCode::kInvalidArgument, "holder cannot help recover its own share");
  }
  if (helper_shares.size() < t) {
    throw Error(ErrorCode::kInsufficientShares,
                "recovering s_v of " + std::to_string(q) + " needs " + std::to_string(t) +
                    " helpers, have " + std::to_string(helper_shares.size()));
  }
  return reconstruct_secret(helper_shares, t);
}

FieldElement pairwise_key(ParticipantId self, ParticipantId peer,
                          const FieldElement& own_a_at_peer, const ShareMap& received) {
  if (self == peer) throw Error(ErrorCode::kInvalidArgument, "no channel to self");
  auto it = received.find(peer);
  if (it == received.end()) {
    throw Error(ErrorCode::kMissingShare, "A_" + std::to_string(peer) + "(" +
                                              std::to_string(self) + ") never received");
  }
  return own_a_at_peer + it->second;
}

FieldElement pairwise_key(ParticipantId self, ParticipantId peer, const UniPoly& own_a,
                          const ShareMap& received) {
  if (self == peer) throw Error(ErrorCode::kInvalidArgument, "no channel to self");
  return pairwise_key(self, peer, own_a.eval(peer), received);
}

}  // namespace vsagg::sharing
