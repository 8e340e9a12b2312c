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

#include "vsagg/algebra/field.h"

#include "vsagg/common/error.h"

namespace vsagg::algebra {

PrimeField::PrimeField(Token, mpz_class p)
    : p_(std::move(p)), bits_(mpz_sizeinbase(p_.get_mpz_t(), 2)) {}

FieldPtr PrimeField::create(const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
    throw Error(ErrorCode::kInvalidArgument, "modulus is not prime: " + p.get_str());
  }
  return std::make_shared<const PrimeField>(Token{}, p);
}

FieldPtr PrimeField::default_field() {
  static const FieldPtr field = [] {
    mpz_class p = 1;
    p <<= 130;
    p -= 5;
    return create(p);
  }();
  return field;
}

FieldPtr PrimeField::mersenne61() {
  static const FieldPtr field = [] {
    mpz_class p = 1;
    p <<= 61;
    p -= 1;
    return create(p);
  }();
  return field;
}

FieldElement PrimeField::element(const mpz_class& value) const {
  return FieldElement(shared_from_this(), value);
}

FieldElement PrimeField::element(std::int64_t value) const {
  return element(mpz_class(std::to_string(value)));
}

FieldElement PrimeField::zero() const { return element(mpz_class(0)); }
FieldElement PrimeField::one() const { return element(mpz_class(1)); }

FieldElement PrimeField::random(Rng& rng) const {
  return element(rng.uniform_below(p_));
}

FieldElement PrimeField::random_nonzero(Rng& rng) const {
  return element(rng.uniform_below(p_ - 1) + 1);
}

FieldElement::FieldElement(FieldPtr field, const mpz_class& value)
    : field_(std::move(field)) {
  if (!field_) throw Error(ErrorCode::kInvalidArgument, "null field");
  mpz_mod(value_.get_mpz_t(), value.get_mpz_t(), field_->modulus().get_mpz_t());
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (!field_ || !o.field_ || !field_->same_as(*o.field_)) {
    throw Error(ErrorCode::kModulusMismatch, "operands belong to different fields");
  }
}

FieldElement FieldElement::inverse() const {
  if (!field_) throw Error(ErrorCode::kModulusMismatch, "unbound element");
  if (value_ == 0) throw Error(ErrorCode::kZeroInverse, "zero has no inverse");
  mpz_class r;
  mpz_invert(r.get_mpz_t(), value_.get_mpz_t(), field_->modulus().get_mpz_t());
  return FieldElement(field_, r);
}

FieldElement FieldElement::pow(const mpz_class& exponent) const {
  if (!field_) throw Error(ErrorCode::kModulusMismatch, "unbound element");
  mpz_class e = exponent;
  mpz_class r;
  if (e < 0) {
    return inverse().pow(-e);
  }
  mpz_powm(r.get_mpz_t(), value_.get_mpz_t(), e.get_mpz_t(),
           field_->modulus().get_mpz_t());
  return FieldElement(field_, r);
}

Bytes FieldElement::to_bytes() const {
  if (!field_) throw Error(ErrorCode::kModulusMismatch, "unbound element");
  const std::size_t width = field_->byte_length();
  Bytes out(width, 0);
  std::size_t count = 0;
  Bytes raw(width + 1, 0);
  mpz_export(raw.data(), &count, 1, 1, 1, 0, value_.get_mpz_t());
  std::copy(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(count),
            out.begin() + static_cast<std::ptrdiff_t>(width - count));
  return out;
}

mpz_class FieldElement::signed_value() const {
  if (!field_) throw Error(ErrorCode::kModulusMismatch, "unbound element");
  const mpz_class& p = field_->modulus();
  if (2 * value_ > p) return value_ - p;
  return value_;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same_field(o);
  value_ += o.value_;
  if (value_ >= field_->modulus()) value_ -= field_->modulus();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same_field(o);
  value_ -= o.value_;
  if (value_ < 0) value_ += field_->modulus();
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same_field(o);
  value_ *= o.value_;
  mpz_mod(value_.get_mpz_t(), value_.get_mpz_t(), field_->modulus().get_mpz_t());
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

FieldElement FieldElement::operator-() const {
  if (!field_) throw Error(ErrorCode::kModulusMismatch, "unbound element");
  return FieldElement(field_, value_ == 0 ? mpz_class(0) : field_->modulus() - value_);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!a.field_ || !b.field_) return a.field_ == b.field_ && a.value_ == b.value_;
  return a.field_->same_as(*b.field_) && a.value_ == b.value_;
}

FieldElement field_inv(const FieldElement& a) { return a.inverse(); }

}  // namespace vsagg::algebra
