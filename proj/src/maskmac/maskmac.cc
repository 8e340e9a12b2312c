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

#include "vsagg/maskmac/maskmac.h"

#include <sodium.h>

#include <array>
#include <string_view>

#include "vsagg/common/error.h"

namespace vsagg::maskmac {
namespace {

constexpr std::string_view kLabelDomain = "vsagg.prg.label.v1";

void put_u64(Bytes& out, std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

}  // namespace

Bytes RoundLabel::encode() const {
  Bytes out;
  out.reserve(16);
  put_u64(out, round);
  put_u64(out, element_index);
  return out;
}

FieldElement hash_to_field(const FieldPtr& field, const RoundLabel& label) {
  const Bytes encoded = label.encode();
  std::array<std::uint8_t, 2 * crypto_hash_sha256_BYTES> wide{};
  for (std::uint8_t ctr = 0; ctr < 2; ++ctr) {
    crypto_hash_sha256_state st;
    crypto_hash_sha256_init(&st);
    crypto_hash_sha256_update(&st, reinterpret_cast<const unsigned char*>(kLabelDomain.data()),
                              kLabelDomain.size());
    crypto_hash_sha256_update(&st, &ctr, 1);
    crypto_hash_sha256_update(&st, encoded.data(), encoded.size());
    crypto_hash_sha256_final(&st, wide.data() + ctr * crypto_hash_sha256_BYTES);
  }
  mpz_class h;
  mpz_import(h.get_mpz_t(), wide.size(), 1, 1, 1, 0, wide.data());
  const mpz_class order = field->modulus() - 1;
  h %= order;
  return field->element(h + 1);
}

Prg::Prg(FieldPtr field, LabelHasher hasher)
    : field_(std::move(field)), hasher_(std::move(hasher)) {
  if (!field_) throw Error(ErrorCode::kInvalidArgument, "null field");
}

FieldElement Prg::operator()(const FieldElement& key, const RoundLabel& label) const {
  return key * point(label);
}

AuthKey::AuthKey(FieldElement s) : s_(std::move(s)) {
  if (!s_.is_bound() || s_.is_zero()) {
    throw Error(ErrorCode::kZeroAuthKey, "authentication key is zero");
  }
}

AuthKey AuthKey::from_partials(std::span<const FieldElement> partial_keys) {
  if (partial_keys.empty()) throw Error(ErrorCode::kInvalidArgument, "no partial keys");
  FieldElement s = partial_keys.front();
  for (std::size_t i = 1; i < partial_keys.size(); ++i) s += partial_keys[i];
  return AuthKey(std::move(s));
}

FieldElement mask(const Prg& prg, const FieldElement& w, const FieldElement& masking_key,
                  const RoundLabel& label) {
  return prg(masking_key, label) + w;
}

FieldElement tag(const Prg& prg, const FieldElement& c1, const FieldElement& mac_key,
                 const AuthKey& s, const RoundLabel& label) {
  return (prg(mac_key, label) - c1) / s.value();
}

MaskedPair mask_and_tag(const Prg& prg, const FieldElement& w, const FieldElement& masking_key,
                        const FieldElement& mac_key, const AuthKey& s, const RoundLabel& label) {
  FieldElement c1 = mask(prg, w, masking_key, label);
  FieldElement c2 = tag(prg, c1, mac_key, s, label);
  return {std::move(c1), std::move(c2), label};
}

MaskedVector mask_vector(const Prg& prg, std::span<const FieldElement> w,
                         const FieldElement& masking_key, const FieldElement& mac_key,
                         const AuthKey& s, std::uint64_t round) {
  MaskedVector out;
  out.reserve(w.size());
  const FieldElement s_inv = s.value().inverse();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const RoundLabel label{round, i};
    const FieldElement h = prg.point(label);
    FieldElement c1 = masking_key * h + w[i];
    FieldElement c2 = (mac_key * h - c1) * s_inv;
    out.push_back({std::move(c1), std::move(c2), label});
  }
  return out;
}

MaskedPair aggregate(std::span<const MaskedPair> pairs) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyAggregate, "nothing to aggregate");
  MaskedPair acc = pairs.front();
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i].label != acc.label) {
      throw Error(ErrorCode::kLabelMismatch, "pairs carry different labels");
    }
    acc.c1 += pairs[i].c1;
    acc.c2 += pairs[i].c2;
  }
  return acc;
}

MaskedVector aggregate_vectors(std::span<const MaskedVector> vectors) {
  if (vectors.empty()) throw Error(ErrorCode::kEmptyAggregate, "nothing to aggregate");
  MaskedVector acc = vectors.front();
  for (std::size_t v = 1; v < vectors.size(); ++v) {
    if (vectors[v].size() != acc.size()) {
      throw Error(ErrorCode::kInvalidArgument, "masked vectors differ in length");
    }
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (vectors[v][i].label != acc[i].label) {
        throw Error(ErrorCode::kLabelMismatch, "pairs carry different labels");
      }
      acc[i].c1 += vectors[v][i].c1;
      acc[i].c2 += vectors[v][i].c2;
    }
  }
  return acc;
}

bool verify(const Prg& prg, const MaskedPair& agg, const FieldElement& k, const AuthKey& s,
            const RoundLabel& label) {
  if (agg.label != label) return false;
  return prg(k, label) == agg.c2 * s.value() + agg.c1;
}

FieldElement unmask(const Prg& prg, const MaskedPair& agg, const FieldElement& v0) {
  return agg.c1 - prg(v0, agg.label);
}

}  // namespace vsagg::maskmac
