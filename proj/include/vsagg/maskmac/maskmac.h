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

#ifndef VSAGG_MASKMAC_MASKMAC_H_
#define VSAGG_MASKMAC_MASKMAC_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "vsagg/algebra/field.h"
#include "vsagg/common/types.h"

namespace vsagg::maskmac {

using algebra::FieldElement;
using algebra::FieldPtr;

// (round, element index): the per-element public nonce labelling every
// masked value. Unique per masked element.
struct RoundLabel {
  std::uint64_t round = 0;
  std::uint64_t element_index = 0;

  // Canonical encoding: 16 bytes, both fields big-endian.
  Bytes encode() const;

  friend auto operator<=>(const RoundLabel&, const RoundLabel&) = default;
};

using LabelHasher = std::function<FieldElement(const FieldPtr&, const RoundLabel&)>;

// H(label) in [1, p): SHA-256("vsagg.prg.label.v1" || ctr || label) for
// ctr = 0, 1, read as a 512-bit big-endian integer, reduced mod p - 1, plus 1.
FieldElement hash_to_field(const FieldPtr& field, const RoundLabel& label);

// Key-homomorphic generator PRG(k, label) = k * H(label) mod p. Linear in the
// key, so PRG(a + b) = PRG(a) + PRG(b) and c * PRG(k) = PRG(c * k). This is the
// minimal instantiation that makes the masking and verification identities
// hold exactly; it is not a PRF against an adversary that sees many labels.
class Prg {
 public:
  explicit Prg(FieldPtr field, LabelHasher hasher = hash_to_field);

  const FieldPtr& field() const { return field_; }
  FieldElement point(const RoundLabel& label) const { return hasher_(field_, label); }
  FieldElement operator()(const FieldElement& key, const RoundLabel& label) const;

 private:
  FieldPtr field_;
  LabelHasher hasher_;
};

// s = sum of the partial keys s_i; must be nonzero.
class AuthKey {
 public:
  // ZeroAuthKey if s == 0.
  explicit AuthKey(FieldElement s);
  static AuthKey from_partials(std::span<const FieldElement> partial_keys);

  const FieldElement& value() const { return s_; }

 private:
  FieldElement s_;
};

// (c1, c2) for one gradient element. Honest pairs satisfy
// PRG(k_i, label) = c2 * s + c1.
struct MaskedPair {
  FieldElement c1;
  FieldElement c2;
  RoundLabel label;

  friend bool operator==(const MaskedPair&, const MaskedPair&) = default;
};

using MaskedVector = std::vector<MaskedPair>;

// c1 = PRG(V_i(0), label) + w.
FieldElement mask(const Prg& prg, const FieldElement& w, const FieldElement& masking_key,
                  const RoundLabel& label);

// c2 = (PRG(k_i, label) - c1) / s.
FieldElement tag(const Prg& prg, const FieldElement& c1, const FieldElement& mac_key,
                 const AuthKey& s, const RoundLabel& label);

MaskedPair mask_and_tag(const Prg& prg, const FieldElement& w, const FieldElement& masking_key,
                        const FieldElement& mac_key, const AuthKey& s, const RoundLabel& label);

// Element i gets label (round, i).
MaskedVector mask_vector(const Prg& prg, std::span<const FieldElement> w,
                         const FieldElement& masking_key, const FieldElement& mac_key,
                         const AuthKey& s, std::uint64_t round);

// Componentwise sum. EmptyAggregate for no input, LabelMismatch if the labels
// differ.
MaskedPair aggregate(std::span<const MaskedPair> pairs);

// Elementwise aggregate of equal-length vectors.
MaskedVector aggregate_vectors(std::span<const MaskedVector> vectors);

// PRG(k, label) == c2 * s + c1, and agg carries `label`.
bool verify(const Prg& prg, const MaskedPair& agg, const FieldElement& k, const AuthKey& s,
            const RoundLabel& label);

// c1 - PRG(V0, label): the plaintext sum once V0 covers exactly the
// contributing set.
FieldElement unmask(const Prg& prg, const MaskedPair& agg, const FieldElement& v0);

}  // namespace vsagg::maskmac

#endif  // VSAGG_MASKMAC_MASKMAC_H_
