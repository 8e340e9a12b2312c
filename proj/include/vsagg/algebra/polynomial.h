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

#ifndef VSAGG_ALGEBRA_POLYNOMIAL_H_
#define VSAGG_ALGEBRA_POLYNOMIAL_H_

#include <cstddef>
#include <span>
#include <vector>

#include "vsagg/algebra/field.h"

namespace vsagg::algebra {

// Dense univariate polynomial; coeffs[0] is the constant term. The degree is
// fixed at construction (leading zeros are kept).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<FieldElement> coeffs);

  // Uniform degree-`degree` polynomial with the given constant term.
  static UniPoly random(const FieldPtr& field, std::size_t degree,
                        const FieldElement& constant, Rng& rng);

  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const FieldPtr& field() const { return coeffs_.front().field(); }
  const FieldElement& constant() const { return coeffs_.front(); }

  FieldElement eval(const FieldElement& x) const;
  FieldElement eval(std::uint64_t x) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<FieldElement> coeffs_;
};

// Horner evaluation; ModulusMismatch if x lives in another field.
FieldElement poly_eval(const UniPoly& f, const FieldElement& x);

// F(x, y) = sum a_{i,j} x^i y^j with a_{i,j} = a_{j,i}, degree <= t-1 in each
// variable. Only the upper triangle (i <= j) is stored.
class SymBivarPoly {
 public:
  // `upper` lists a_{i,j} for 0 <= i <= j < t in row-major order.
  SymBivarPoly(std::size_t t, std::vector<FieldElement> upper);

  static SymBivarPoly random(const FieldPtr& field, std::size_t t,
                             const FieldElement& secret, Rng& rng);

  std::size_t threshold() const { return t_; }
  const FieldElement& coeff(std::size_t i, std::size_t j) const;
  const FieldElement& secret() const { return coeff(0, 0); }
  const FieldPtr& field() const { return upper_.front().field(); }

  FieldElement eval(const FieldElement& x, const FieldElement& y) const;

  // F(x, j) as a polynomial in x; by symmetry this is also F(j, y).
  UniPoly row(const FieldElement& j) const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::size_t t_;
  std::vector<FieldElement> upper_;
};

UniPoly bivar_row(const SymBivarPoly& f, const FieldElement& j);

struct Point {
  FieldElement x;
  FieldElement y;
};

// Lagrange basis values lambda_k(target) for the nodes xs.
std::vector<FieldElement> lagrange_coefficients(std::span<const FieldElement> xs,
                                                const FieldElement& target);

// Value at `target` of the unique degree-(t-1) polynomial through the first t
// points. InsufficientShares if fewer than t points are given; DuplicatePoint
// if any two points share an x.
FieldElement lagrange_at(std::span<const Point> points, const FieldElement& target,
                         std::size_t t);

FieldElement lagrange_at_zero(std::span<const Point> points, std::size_t t);

}  // namespace vsagg::algebra

#endif  // VSAGG_ALGEBRA_POLYNOMIAL_H_
