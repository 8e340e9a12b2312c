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

#ifndef VSAGG_SHARING_SHARING_H_
#define VSAGG_SHARING_SHARING_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "vsagg/algebra/field.h"
#include "vsagg/algebra/polynomial.h"
#include "vsagg/common/random.h"
#include "vsagg/common/types.h"

namespace vsagg::sharing {

using algebra::FieldElement;
using algebra::FieldPtr;
using algebra::SymBivarPoly;
using algebra::UniPoly;

enum class ShareKind { kV, kA, kBivarRow };

struct Share {
  ParticipantId dealer = 0;
  ParticipantId holder = 0;
  ShareKind kind = ShareKind::kV;
  // Field element for V/A shares, row polynomial for bivariate rows.
  std::variant<FieldElement, UniPoly> value;

  const FieldElement& scalar() const { return std::get<FieldElement>(value); }
  const UniPoly& row() const { return std::get<UniPoly>(value); }
};

using ShareMap = std::map<ParticipantId, FieldElement>;

// Direct symmetric-bivariate dealing: recipient j receives F(x, j). Kept as a
// reference scheme and cross-check for the two-step dealing below.
// ThresholdTooLarge if t exceeds recipients + 1.
std::vector<Share> deal_direct(ParticipantId dealer, const SymBivarPoly& f,
                               std::span<const ParticipantId> recipients);

// Shares received by one holder during Setup.
class ShareBundle {
 public:
  explicit ShareBundle(ParticipantId holder) : holder_(holder) {}

  ParticipantId holder() const { return holder_; }

  // Files a V- or A-share addressed to this holder.
  void receive(const Share& share);

  const ShareMap& received_v() const { return received_v_; }
  const ShareMap& received_a() const { return received_a_; }
  std::optional<FieldElement> v_from(ParticipantId dealer) const;
  std::optional<FieldElement> a_from(ParticipantId dealer) const;

  bool has_v_from_all(std::span<const ParticipantId> dealers) const;
  bool has_a_from_all(std::span<const ParticipantId> dealers) const;

  void clear();

 private:
  ParticipantId holder_;
  ShareMap received_v_;
  ShareMap received_a_;
};

// One participant's dealer-side material for two-step dealing:
// V_i (masking polynomial), s_{v_i} = V(i) and A_i with A_i(0) = s_{v_i}.
class DealerState {
 public:
  // Draws a uniform degree-(t-1) V_i and partial authentication key s_i.
  DealerState(ParticipantId id, std::size_t t, const FieldPtr& field, Rng& rng);
  DealerState(ParticipantId id, std::size_t t, UniPoly v_poly, FieldElement partial_auth_key);

  ParticipantId id() const { return id_; }
  std::size_t threshold() const { return t_; }
  const FieldPtr& field() const { return v_poly_.field(); }
  const UniPoly& v_poly() const { return v_poly_; }

  // V_i(0): the masking secret.
  FieldElement masking_secret() const { return v_poly_.constant(); }
  // k_i = V_i(i): the MAC key.
  FieldElement mac_key() const { return v_poly_.eval(id_); }

  const FieldElement& partial_auth_key() const { return partial_auth_key_; }
  void set_partial_auth_key(FieldElement s_i) { partial_auth_key_ = std::move(s_i); }

  // Step 1: V_i(j) for every recipient j != id.
  std::vector<Share> deal_round1(std::span<const ParticipantId> recipients) const;

  // s_{v_i} = V_i(i) + sum of V_j(i) over the other dealers. MissingStep1Share
  // if any dealer's share has not arrived.
  const FieldElement& accumulate_sv(const ShareBundle& bundle,
                                    std::span<const ParticipantId> dealers);

  // Step 2: draws A_i with A_i(0) = s_{v_i} and returns A_i(j) per recipient.
  std::vector<Share> deal_round2(std::span<const ParticipantId> recipients, Rng& rng);
  // Same, with a caller-chosen A_i; A_i(0) must equal s_{v_i}.
  std::vector<Share> deal_round2(std::span<const ParticipantId> recipients, UniPoly a_poly);

  const std::optional<FieldElement>& s_v() const { return s_v_; }
  const std::optional<UniPoly>& a_poly() const { return a_poly_; }

  // Restores s_{v_i} after recovery, without an A polynomial.
  void restore_sv(FieldElement s_v) { s_v_ = std::move(s_v); }
  // Drops Setup-derived material (s_{v_i}, A_i); V_i and s_i survive.
  void forget_setup_material();

 private:
  ParticipantId id_;
  std::size_t t_;
  UniPoly v_poly_;
  FieldElement partial_auth_key_;
  std::optional<FieldElement> s_v_;
  std::optional<UniPoly> a_poly_;
};

// Lagrange interpolation at zero over (id, value) shares; ids are the x's.
FieldElement reconstruct_secret(const ShareMap& shares, std::size_t t);

// Interpolation at an arbitrary id, e.g. k_i = V_i(i) from t values V_i(l).
FieldElement reconstruct_at(const ShareMap& shares, ParticipantId x, std::size_t t);

// Rebuilds s_{v_q} = A_q(0) from helper values A_q(j).
FieldElement recover_lost_share(ParticipantId q, const ShareMap& helper_shares, std::size_t t);

// k_{ij} = A_i(j) + A_j(i). `own_a_at_peer` is A_self(peer); `received` is
// the A-share map holding A_peer(self). MissingShare if it never arrived.
FieldElement pairwise_key(ParticipantId self, ParticipantId peer,
                          const FieldElement& own_a_at_peer, const ShareMap& received);
FieldElement pairwise_key(ParticipantId self, ParticipantId peer, const UniPoly& own_a,
                          const ShareMap& received);

}  // namespace vsagg::sharing

#endif  // VSAGG_SHARING_SHARING_H_
