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

#ifndef VSAGG_ALGEBRA_FIXED_POINT_H_
#define VSAGG_ALGEBRA_FIXED_POINT_H_

#include <cstddef>
#include <span>
#include <vector>

#include "vsagg/algebra/field.h"

namespace vsagg::algebra {

// Fixed-point encoded model update, one field element per parameter.
using GradientVector = std::vector<FieldElement>;

// Maps reals into Z_p as round(clip(v) * 2^scale_bits) with negatives lifted
// to p - |x|. Decoding takes the centered lift, so sums of up to max_summands()
// encodings decode without wrap-around.
class FixedPointCodec {
 public:
  FixedPointCodec(FieldPtr field, int scale_bits = 16, double clip_bound = 8.0);

  const FieldPtr& field() const { return field_; }
  int scale_bits() const { return scale_bits_; }
  double clip_bound() const { return clip_bound_; }
  double resolution() const;

  // Largest M with M * clip_bound * 2^scale_bits < p / 2.
  std::size_t max_summands() const;
  // CapacityExceeded if `summands` encodings could wrap mod p.
  void require_capacity(std::size_t summands) const;

  double clip(double v) const;
  FieldElement encode(double v) const;
  double decode(const FieldElement& e) const;

  GradientVector encode(std::span<const double> v) const;
  std::vector<double> decode(std::span<const FieldElement> e) const;

 private:
  FieldPtr field_;
  int scale_bits_;
  double clip_bound_;
};

GradientVector encode_gradient(std::span<const double> v, const FixedPointCodec& codec);
std::vector<double> decode_gradient(std::span<const FieldElement> e,
                                    const FixedPointCodec& codec);

}  // namespace vsagg::algebra

#endif  // VSAGG_ALGEBRA_FIXED_POINT_H_
