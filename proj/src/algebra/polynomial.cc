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

#include "vsagg/algebra/polynomial.h"

#include <string>

#include "vsagg/common/error.h"

namespace vsagg::algebra {

UniPoly::UniPoly(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::kInvalidArgument, "polynomial needs a coefficient");
  for (const auto& c : coeffs_) {
    if (!c.is_bound() || !c.field()->same_as(*coeffs_.front().field())) {
      throw Error(ErrorCode::kModulusMismatch, "coefficients from different fields");
    }
  }
}

UniPoly UniPoly::random(const FieldPtr& field, std::size_t degree,
                        const FieldElement& constant, Rng& rng) {
  std::vector<FieldElement> coeffs;
  coeffs.reserve(degree + 1);
  coeffs.push_back(constant);
  for (std::size_t i = 0; i < degree; ++i) coeffs.push_back(field->random(rng));
  return UniPoly(std::move(coeffs));
}

FieldElement UniPoly::eval(const FieldElement& x) const {
  if (!x.is_bound() || !x.field()->same_as(*field())) {
    throw Error(ErrorCode::kModulusMismatch, "evaluation point from another field");
  }
  const mpz_class& p = field()->modulus();
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x.value();
    acc += it->value();
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), p.get_mpz_t());
  }
  return FieldElement(field(), acc);
}

FieldElement UniPoly::eval(std::uint64_t x) const {
  return eval(field()->element(mpz_class(std::to_string(x))));
}

FieldElement poly_eval(const UniPoly& f, const FieldElement& x) { return f.eval(x); }

SymBivarPoly::SymBivarPoly(std::size_t t, std::vector<FieldElement> upper)
    : t_(t), upper_(std::move(upper)) {
  if (t_ == 0 || upper_.size() != t_ * (t_ + 1) / 2) {
    throw Error(ErrorCode::kInvalidArgument, "need t(t+1)/2 coefficients");
  }
}

SymBivarPoly SymBivarPoly::random(const FieldPtr& field, std::size_t t,
                                  const FieldElement& secret, Rng& rng) {
  std::vector<FieldElement> upper;
  upper.reserve(t * (t + 1) / 2);
  upper.push_back(secret);
  while (upper.size() < t * (t + 1) / 2) upper.push_back(field->random(rng));
  return SymBivarPoly(t, std::move(upper));
}

std::size_t SymBivarPoly::index(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (j >= t_) throw Error(ErrorCode::kInvalidArgument, "coefficient index out of range");
  // Row i of the upper triangle starts after rows 0..i-1 of lengths t, t-1, ...
  return i * t_ - i * (i - 1) / 2 + (j - i);
}

const FieldElement& SymBivarPoly::coeff(std::size_t i, std::size_t j) const {
  return upper_[index(i, j)];
}

UniPoly SymBivarPoly::row(const FieldElement& j) const {
  std::vector<FieldElement> ypow;
  ypow.reserve(t_);
  ypow.push_back(field()->one());
  for (std::size_t k = 1; k < t_; ++k) ypow.push_back(ypow.back() * j);
  std::vector<FieldElement> coeffs;
  coeffs.reserve(t_);
  for (std::size_t i = 0; i < t_; ++i) {
    FieldElement c = field()->zero();
    for (std::size_t k = 0; k < t_; ++k) c += coeff(i, k) * ypow[k];
    coeffs.push_back(std::move(c));
  }
  return UniPoly(std::move(coeffs));
}

FieldElement SymBivarPoly::eval(const FieldElement& x, const FieldElement& y) const {
  return row(y).eval(x);
}

UniPoly bivar_row(const SymBivarPoly& f, const FieldElement& j) { return f.row(j); }

std::vector<FieldElement> lagrange_coefficients(std::span<const FieldElement> xs,
                                                const FieldElement& target) {
  std::vector<FieldElement> out;
  out.reserve(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    FieldElement num = target.field()->one();
    FieldElement den = target.field()->one();
    for (std::size_t m = 0; m < xs.size(); ++m) {
      if (m == k) continue;
      num *= target - xs[m];
      den *= xs[k] - xs[m];
    }
    if (den.is_zero()) throw Error(ErrorCode::kDuplicatePoint, "repeated x coordinate");
    out.push_back(num / den);
  }
  return out;
}

FieldElement lagrange_at(std::span<const Point> points, const FieldElement& target,
                         std::size_t t) {
  if (t == 0) throw Error(ErrorCode::kInvalidArgument, "threshold must be positive");
  if (points.size() < t) {
    throw Error(ErrorCode::kInsufficientShares,
                "have " + std::to_string(points.size()) + " points, need " + std::to_string(t));
  }
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (points[a].x == points[b].x) {
        throw Error(ErrorCode::kDuplicatePoint, "x = " + points[a].x.to_string() + " repeats");
      }
    }
  }
  std::vector<FieldElement> xs;
  xs.reserve(t);
  for (std::size_t k = 0; k < t; ++k) xs.push_back(points[k].x);
  const auto lambda = lagrange_coefficients(xs, target);
  FieldElement acc = target.field()->zero();
  for (std::size_t k = 0; k < t; ++k) acc += lambda[k] * points[k].y;
  return acc;
}

FieldElement lagrange_at_zero(std::span<const Point> points, std::size_t t) {
  if (points.empty()) throw Error(ErrorCode::kInsufficientShares, "no points");
  return lagrange_at(points, points.front().x.field()->zero(), t);
}

}  // namespace vsagg::algebra
