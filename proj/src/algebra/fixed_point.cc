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

#include "vsagg/algebra/fixed_point.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "vsagg/common/error.h"

namespace vsagg::algebra {

FixedPointCodec::FixedPointCodec(FieldPtr field, int scale_bits, double clip_bound)
    : field_(std::move(field)), scale_bits_(scale_bits), clip_bound_(clip_bound) {
  if (!field_) throw Error(ErrorCode::kInvalidArgument, "null field");
  if (scale_bits_ < 0 || scale_bits_ > 52) {
    throw Error(ErrorCode::kInvalidArgument, "scale_bits must lie in [0, 52]");
  }
  if (!(clip_bound_ > 0.0) || !std::isfinite(clip_bound_)) {
    throw Error(ErrorCode::kInvalidArgument, "clip_bound must be positive and finite");
  }
  require_capacity(1);
}

double FixedPointCodec::resolution() const { return std::ldexp(1.0, -scale_bits_); }

std::size_t FixedPointCodec::max_summands() const {
  // Largest encoded magnitude of a single value.
  const mpz_class unit(std::to_string(
      static_cast<unsigned long long>(std::llround(std::ldexp(clip_bound_, scale_bits_)))));
  if (unit == 0) return static_cast<std::size_t>(-1);
  mpz_class half = field_->modulus() / 2;
  mpz_class m = half / unit;
  if (m * unit == half) m -= 1;  // strict inequality
  if (!m.fits_ulong_p()) return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(m.get_ui());
}

void FixedPointCodec::require_capacity(std::size_t summands) const {
  if (summands > max_summands()) {
    throw Error(ErrorCode::kCapacityExceeded,
                std::to_string(summands) + " summands exceed the modulus headroom (max " +
                    std::to_string(max_summands()) + ")");
  }
}

double FixedPointCodec::clip(double v) const {
  if (std::isnan(v)) return 0.0;
  return std::clamp(v, -clip_bound_, clip_bound_);
}


FieldElement FixedPointCodec::encode(double v) const {
  const long long q = std::llround(std::ldexp(clip(v), scale_bits_));
  return field_->element(static_cast<std::int64_t>(q));
}

double FixedPointCodec::decode(const FieldElement& e) const {
  if (!e.is_bound() || !e.field()->same_as(*field_)) {
    throw Error(ErrorCode::kModulusMismatch, "element from another field");
  }
  return std::ldexp(e.signed_value().get_d(), -scale_bits_);
}

GradientVector FixedPointCodec::encode(std::span<const double> v) const {
  GradientVector out;
  out.reserve(v.size());
  for (double x : v) out.push_back(encode(x));
  return out;
}

std::vector<double> FixedPointCodec::decode(std::span<const FieldElement> e) const {
  std::vector<double> out;
  out.reserve(e.size());
  for (const auto& x : e) out.push_back(decode(x));
  return out;
}

GradientVector encode_gradient(std::span<const double> v, const FixedPointCodec& codec) {
  return codec.encode(v);
}

std::vector<double> decode_gradient(std::span<const FieldElement> e,
                                    const FixedPointCodec& codec) {
  return codec.decode(e);
}

}  // namespace vsagg::algebra
