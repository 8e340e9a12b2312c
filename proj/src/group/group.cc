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

#include "vsagg/group/group.h"

#include <string>

#include "vsagg/algebra/polynomial.h"
#include "vsagg/common/error.h"

namespace vsagg::group {

SchnorrGroup::SchnorrGroup(mpz_class modulus, FieldPtr exponent_field, GroupElement generator)
    : modulus_(std::move(modulus)),
      exponent_field_(std::move(exponent_field)),
      generator_(std::move(generator)) {}

GroupPtr SchnorrGroup::create(const mpz_class& modulus, const mpz_class& order,
                              const mpz_class& generator) {
  if (modulus < 3 || mpz_probab_prime_p(modulus.get_mpz_t(), 40) == 0) {
    throw Error(ErrorCode::kInvalidArgument, "group modulus is not prime");
  }
  FieldPtr zq = algebra::PrimeField::create(order);
  if ((modulus - 1) % order != 0) {
    throw Error(ErrorCode::kInvalidArgument, "order does not divide P - 1");
  }
  mpz_class g;
  mpz_mod(g.get_mpz_t(), generator.get_mpz_t(), modulus.get_mpz_t());
  mpz_class check;
  mpz_powm(check.get_mpz_t(), g.get_mpz_t(), order.get_mpz_t(), modulus.get_mpz_t());
  if (g <= 1 || check != 1) {
    throw Error(ErrorCode::kInvalidArgument, "generator does not have order q");
  }
  return std::make_shared<const SchnorrGroup>(modulus, std::move(zq), GroupElement{g});
}

GroupPtr SchnorrGroup::toy() {
  static const GroupPtr group =
      create(mpz_class("9223372036854778487"), mpz_class("4611686018427389243"), mpz_class(4));
  return group;
}

GroupPtr SchnorrGroup::modp2048() {
  static const GroupPtr group = [] {
    const mpz_class p(
        "FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD129024E088A67CC74020BBEA63B139B22514A0879"
        "8E3404DDEF9519B3CD3A431B302B0A6DF25F14374FE1356D6D51C245E485B576625E7EC6F44C42E9A637ED6B"
        "0BFF5CB6F406B7EDEE386BFB5A899FA5AE9F24117C4B1FE649286651ECE45B3DC2007CB8A163BF0598DA4836"
        "1C55D39A69163FA8FD24CF5F83655D23DCA3AD961C62F356208552BB9ED529077096966D670C354E4ABC9804"
        "F1746C08CA18217C32905E462E36CE3BE39E772C180E86039B2783A2EC07A28FB5C55DF06F4C52C9DE2BCBF6"
        "955817183995497CEA956AE515D2261898FA051015728E5A8AACAA68FFFFFFFFFFFFFFFF",
        16);
    return create(p, (p - 1) / 2, mpz_class(2));
  }();
  return group;
}

GroupElement SchnorrGroup::mul(const GroupElement& a, const GroupElement& b) const {
  mpz_class r = a.value * b.value;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus_.get_mpz_t());
  return {std::move(r)};
}

GroupElement SchnorrGroup::inverse(const GroupElement& a) const {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.value.get_mpz_t(), modulus_.get_mpz_t()) == 0) {
    throw Error(ErrorCode::kInvalidArgument, "element is not invertible");
  }
  return {std::move(r)};
}

GroupElement SchnorrGroup::pow(const GroupElement& base, const mpz_class& exponent) const {
  mpz_class e;
  mpz_mod(e.get_mpz_t(), exponent.get_mpz_t(), order().get_mpz_t());
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.value.get_mpz_t(), e.get_mpz_t(), modulus_.get_mpz_t());
  return {std::move(r)};
}

GroupElement SchnorrGroup::pow(const GroupElement& base, const FieldElement& exponent) const {
  if (!exponent.is_bound() || !exponent.field()->same_as(*exponent_field_)) {
    throw Error(ErrorCode::kModulusMismatch, "exponent is not in Z_q");
  }
  return pow(base, exponent.value());
}

bool SchnorrGroup::contains(const GroupElement& a) const {
  if (a.value <= 0 || a.value >= modulus_) return false;
  mpz_class r;
  mpz_powm(r.get_mpz_t(), a.value.get_mpz_t(), order().get_mpz_t(), modulus_.get_mpz_t());
  return r == 1;
}

Bytes SchnorrGroup::encode(const GroupElement& a) const {
  const std::size_t width = (mpz_sizeinbase(modulus_.get_mpz_t(), 2) + 7) / 8;
  Bytes raw(width + 1, 0);
  std::size_t count = 0;
  mpz_export(raw.data(), &count, 1, 1, 1, 0, a.value.get_mpz_t());
  Bytes out(width, 0);
  std::copy(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(count),
            out.begin() + static_cast<std::ptrdiff_t>(width - count));
  return out;
}

KeyPair KeyPair::generate(const SchnorrGroup& group, Rng& rng) {
  FieldElement sk = group.exponent_field()->random_nonzero(rng);
  GroupElement pk = group.exp(sk);
  return {std::move(sk), std::move(pk)};
}

GroupElement wrap_share(const SchnorrGroup& group, const FieldElement& x,
                        const GroupElement& recipient_pk) {
  return group.pow(recipient_pk, x);
}

GroupElement unwrap_share(const SchnorrGroup& group, const GroupElement& wrapped,
                          const FieldElement& sk) {
  return group.pow(wrapped, sk.inverse());
}

GroupElement exp_lagrange_at(const SchnorrGroup& group, std::span<const ExpPoint> points,
                             ParticipantId target, std::size_t t) {
  if (t == 0) throw Error(ErrorCode::kInvalidArgument, "threshold must be positive");
  if (points.size() < t) {
    throw Error(ErrorCode::kInsufficientShares,
                "have " + std::to_string(points.size()) + " points, need " + std::to_string(t));
  }
  const FieldPtr& zq = group.exponent_field();
  std::vector<FieldElement> xs;
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (points[a].first == points[b].first) {
        throw Error(ErrorCode::kDuplicatePoint, "x = " + std::to_string(points[a].first));
      }
    }
  }
  for (std::size_t k = 0; k < t; ++k) {
    xs.push_back(zq->element(static_cast<std::int64_t>(points[k].first)));
  }
  const auto lambda =
      algebra::lagrange_coefficients(xs, zq->element(static_cast<std::int64_t>(target)));
  GroupElement acc = group.identity();
  for (std::size_t k = 0; k < t; ++k) {
    acc = group.mul(acc, group.pow(points[k].second, lambda[k]));
  }
  return acc;
}

GroupElement exp_lagrange_at_zero(const SchnorrGroup& group, std::span<const ExpPoint> points,
                                  std::size_t t) {
  return exp_lagrange_at(group, points, 0, t);
}

}  // namespace vsagg::group
