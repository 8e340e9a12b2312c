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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "vsagg/algebra/field.h"
#include "vsagg/algebra/fixed_point.h"
#include "vsagg/algebra/polynomial.h"
#include "vsagg/common/error.h"
#include "vsagg/common/random.h"

namespace vsagg::algebra {
namespace {

FieldPtr f31() { return PrimeField::create(31); }

UniPoly poly(const FieldPtr& f, std::initializer_list<std::int64_t> coeffs) {
  std::vector<FieldElement> c;
  for (auto v : coeffs) c.push_back(f->element(v));
  return UniPoly(c);
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kInvalidArgument;
}

TEST(FieldTest, InverseExamples) {
  const FieldPtr f = f31();
  EXPECT_EQ(field_inv(f->element(4)), f->element(8));
  EXPECT_EQ(field_inv(f->element(1)), f->element(1));
  EXPECT_EQ(field_inv(f->element(30)), f->element(30));
  EXPECT_EQ(code_of([&] { field_inv(f->zero()); }), ErrorCode::kZeroInverse);
}

TEST(FieldTest, InverseMatchesExhaustiveSearch) {
  const FieldPtr f = f31();
  for (int a = 1; a < 31; ++a) {
    int expected = 0;
    for (int b = 1; b < 31; ++b) {
      if ((a * b) % 31 == 1) expected = b;
    }
    EXPECT_EQ(field_inv(f->element(a)).value(), expected) << a;
  }
}

TEST(FieldTest, InverseIsMultiplicative) {
  const FieldPtr f = PrimeField::default_field();
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const FieldElement a = f->random_nonzero(rng);
    const FieldElement b = f->random_nonzero(rng);
    EXPECT_EQ(field_inv(a * b), field_inv(a) * field_inv(b));
  }
}

TEST(FieldTest, ArithmeticAgreesWithIntegerOracle) {
  const FieldPtr f = PrimeField::mersenne61();
  const mpz_class p = f->modulus();
  Rng rng(9);
  for (int i = 0; i < 500; ++i) {
    const mpz_class a = rng.uniform_below(p);
    const mpz_class b = rng.uniform_below(p);
    auto reduce = [&](mpz_class v) {
      v %= p;
      if (v < 0) v += p;
      return v;
    };
    EXPECT_EQ((f->element(a) + f->element(b)).value(), reduce(a + b));
    EXPECT_EQ((f->element(a) - f->element(b)).value(), reduce(a - b));
    EXPECT_EQ((f->element(a) * f->element(b)).value(), reduce(a * b));
  }
}

TEST(FieldTest, DefaultFieldIsThe130BitPrime) {
  const FieldPtr f = PrimeField::default_field();
  mpz_class expected = 1;
  expected <<= 130;
  expected -= 5;
  EXPECT_EQ(f->modulus(), expected);
  EXPECT_EQ(f->bits(), 130u);
  EXPECT_EQ(f->byte_length(), 17u);
  EXPECT_EQ(f->one().to_bytes().size(), 17u);
}

TEST(FieldTest, RejectsCompositeModulus) {
  EXPECT_EQ(code_of([] { PrimeField::create(33); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { PrimeField::create(1); }), ErrorCode::kInvalidArgument);
}

TEST(FieldTest, MixingModuliIsAnError) {
  const FieldPtr a = f31();
  const FieldPtr b = PrimeField::create(37);
  EXPECT_EQ(code_of([&] { (void)(a->one() + b->one()); }), ErrorCode::kModulusMismatch);
  EXPECT_NE(a->one(), b->one());
}

TEST(FieldTest, SignedValueIsCenteredLift) {
  const FieldPtr f = f31();
  EXPECT_EQ(f->element(-3).value(), 28);
  EXPECT_EQ(f->element(-3).signed_value(), -3);
  EXPECT_EQ(f->element(15).signed_value(), 15);
  EXPECT_EQ(f->element(16).signed_value(), -15);
}

TEST(PolynomialTest, EvalExamples) {
  const FieldPtr f = f31();
  const UniPoly p = poly(f, {5, 3});
  EXPECT_EQ(poly_eval(p, f->element(1)), f->element(8));
  EXPECT_EQ(poly_eval(p, f->element(0)), f->element(5));
  EXPECT_EQ(poly_eval(p, f->element(2)), f->element(11));
  EXPECT_EQ(code_of([&] { poly_eval(p, PrimeField::create(37)->one()); }),
            ErrorCode::kModulusMismatch);
}

TEST(PolynomialTest, LagrangeExamples) {
  const FieldPtr f = f31();
  auto pt = [&](int x, int y) { return Point{f->element(x), f->element(y)}; };
  const std::vector<Point> two = {pt(1, 8), pt(2, 11)};
  EXPECT_EQ(lagrange_at_zero(two, 2), f->element(5));
  const std::vector<Point> one = {pt(1, 9)};
  EXPECT_EQ(lagrange_at_zero(one, 1), f->element(9));
  const std::vector<Point> three = {pt(1, 8), pt(2, 11), pt(3, 14)};
  EXPECT_EQ(lagrange_at_zero(three, 2), f->element(5));
  EXPECT_EQ(code_of([&] { lagrange_at_zero(one, 2); }), ErrorCode::kInsufficientShares);
  const std::vector<Point> dup = {pt(1, 8), pt(1, 11)};
  EXPECT_EQ(code_of([&] { lagrange_at_zero(dup, 2); }), ErrorCode::kDuplicatePoint);
}

// Property: t distinct points of a random degree-(t-1) polynomial determine
// f(0), for small and large p.
TEST(PolynomialTest, LagrangeRecoversConstantTerm) {
  Rng rng(17);
  for (const FieldPtr& f : {f31(), PrimeField::default_field()}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t t = 1 + rng.uniform_u64(5);
      const UniPoly p = UniPoly::random(f, t - 1, f->random(rng), rng);
      std::vector<std::uint64_t> xs;
      while (xs.size() < t) {
        const std::uint64_t x = 1 + rng.uniform_u64(30);
        if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
      }
      std::vector<Point> pts;
      for (auto x : xs) pts.push_back({f->element(static_cast<std::int64_t>(x)), p.eval(x)});
      ASSERT_EQ(lagrange_at_zero(pts, t), p.constant());
    }
  }
}

TEST(PolynomialTest, BivariateRowExamples) {
  const FieldPtr f = f31();
  // F = 1 + 2x + 2y + 3xy: upper triangle a00, a01, a11.
  const SymBivarPoly F(2, {f->element(1), f->element(2), f->element(3)});
  EXPECT_EQ(bivar_row(F, f->zero()), poly(f, {1, 2}));
  EXPECT_EQ(bivar_row(F, f->one()), poly(f, {3, 5}));
  EXPECT_EQ(bivar_row(F, f->element(1)).eval(2), bivar_row(F, f->element(2)).eval(1));
}

TEST(PolynomialTest, BivariateIsSymmetric) {
  const FieldPtr f = PrimeField::mersenne61();
  Rng rng(23);
  for (int k = 0; k < 5; ++k) {
    const SymBivarPoly F = SymBivarPoly::random(f, 4, f->random(rng), rng);
    for (int i = 0; i < 100; ++i) {
      const FieldElement x = f->random(rng);
      const FieldElement y = f->random(rng);
      ASSERT_EQ(F.eval(x, y), F.eval(y, x));
    }
  }
}

TEST(FixedPointTest, EncodeExamples) {
  const FieldPtr f = f31();
  // p = 31 is far too small for the default capacity; use a wider prime.
  const FieldPtr big = PrimeField::mersenne61();
  const FixedPointCodec codec(big, 8, 8.0);
  EXPECT_EQ(codec.encode(1.5), big->element(384));
  EXPECT_EQ(codec.encode(-1.5), big->element(big->modulus() - 384));
  EXPECT_DOUBLE_EQ(codec.decode(codec.encode(1.5) + codec.encode(-1.5)), 0.0);
  EXPECT_EQ(code_of([&] { FixedPointCodec(f, 8, 8.0); }), ErrorCode::kCapacityExceeded);
}

TEST(FixedPointTest, ClipsAndHandlesNan) {
  const FixedPointCodec codec(PrimeField::default_field(), 16, 8.0);
  EXPECT_DOUBLE_EQ(codec.decode(codec.encode(100.0)), 8.0);
  EXPECT_DOUBLE_EQ(codec.decode(codec.encode(-100.0)), -8.0);
  EXPECT_DOUBLE_EQ(codec.decode(codec.encode(std::nan(""))), 0.0);
}

TEST(FixedPointTest, CapacityCheck) {
  const FixedPointCodec codec(PrimeField::mersenne61(), 16, 8.0);
  // 2^60 / 2^19 = 2^41 summands fit.
  EXPECT_NO_THROW(codec.require_capacity(std::size_t{1} << 40));
  EXPECT_EQ(code_of([&] { codec.require_capacity(std::size_t{1} << 42); }),
            ErrorCode::kCapacityExceeded);
}

// Property: decode of a sum of M encodings is within M * 2^-scale of the sum
// of clipped inputs.
TEST(FixedPointTest, SumErrorBound) {
  Rng rng(31);
  for (int scale : {8, 16}) {
    const FixedPointCodec codec(PrimeField::default_field(), scale, 8.0);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t m = 1 + rng.uniform_u64(64);
      FieldElement sum = codec.field()->zero();
      double expected = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        const double v = (rng.uniform01() * 2.0 - 1.0) * 10.0;
        sum += codec.encode(v);
        expected += codec.clip(v);
      }
      ASSERT_LE(std::abs(codec.decode(sum) - expected),
                static_cast<double>(m) * std::ldexp(1.0, -scale));
    }
  }
}

TEST(FixedPointTest, VectorRoundTrip) {
  const FixedPointCodec codec(PrimeField::default_field(), 16, 8.0);
  const std::vector<double> v = {0.0, 1.25, -3.75, 7.9999, -8.0};
  const auto back = decode_gradient(encode_gradient(v, codec), codec);
  ASSERT_EQ(back.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_NEAR(back[i], v[i], codec.resolution());
}

}  // namespace
}  // namespace vsagg::algebra
