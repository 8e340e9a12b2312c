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

#ifndef VSAGG_GROUP_GROUP_H_
#define VSAGG_GROUP_GROUP_H_

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "vsagg/algebra/field.h"
#include "vsagg/common/random.h"
#include "vsagg/common/types.h"

namespace vsagg::group {

using algebra::FieldElement;
using algebra::FieldPtr;

struct GroupElement {
  mpz_class value;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.value == b.value;
  }
};

class SchnorrGroup;
using GroupPtr = std::shared_ptr<const SchnorrGroup>;

// Order-q subgroup of Z_P^* generated by g, with q prime and q | P - 1.
// Exponents live in the prime field Z_q.
class SchnorrGroup {
 public:
  // InvalidArgument unless P and q are prime, q | P - 1, g != 1 and g^q = 1.
  static GroupPtr create(const mpz_class& modulus, const mpz_class& order,
                         const mpz_class& generator);

  // P = 2q + 1 with a 64-bit P, g = 4. For tests and the CLI.
  static GroupPtr toy();
  // RFC 3526 2048-bit MODP group (safe prime), g = 2.
  static GroupPtr modp2048();

  const mpz_class& modulus() const { return modulus_; }
  const mpz_class& order() const { return exponent_field_->modulus(); }
  const FieldPtr& exponent_field() const { return exponent_field_; }
  const GroupElement& generator() const { return generator_; }

  GroupElement identity() const { return {mpz_class(1)}; }
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement pow(const GroupElement& base, const mpz_class& exponent) const;
  GroupElement pow(const GroupElement& base, const FieldElement& exponent) const;
  // G^e.
  GroupElement exp(const FieldElement& e) const { return pow(generator_, e); }
  bool contains(const GroupElement& a) const;

  // Fixed-width big-endian encoding.
  Bytes encode(const GroupElement& a) const;

  SchnorrGroup(mpz_class modulus, FieldPtr exponent_field, GroupElement generator);

 private:
  mpz_class modulus_;
  FieldPtr exponent_field_;
  GroupElement generator_;
};

struct KeyPair {
  FieldElement sk;
  GroupElement pk;

  // sk uniform in [1, q).
  static KeyPair generate(const SchnorrGroup& group, Rng& rng);
};

// pk^x = G^{sk x}; only the holder of sk can strip the wrapping.
GroupElement wrap_share(const SchnorrGroup& group, const FieldElement& x,
                        const GroupElement& recipient_pk);
// w^{sk^{-1} mod q}.
GroupElement unwrap_share(const SchnorrGroup& group, const GroupElement& wrapped,
                          const FieldElement& sk);

using ExpPoint = std::pair<ParticipantId, GroupElement>;

// prod Y_j^{lambda_j(target)} over the first t points: G^{V(target)} when
// Y_j = G^{V(j)}. InsufficientShares / DuplicatePoint as for scalars.
GroupElement exp_lagrange_at(const SchnorrGroup& group, std::span<const ExpPoint> points,
                             ParticipantId target, std::size_t t);
GroupElement exp_lagrange_at_zero(const SchnorrGroup& group, std::span<const ExpPoint> points,
                                  std::size_t t);

}  // namespace vsagg::group

#endif  // VSAGG_GROUP_GROUP_H_
