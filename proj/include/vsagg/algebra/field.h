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

#ifndef VSAGG_ALGEBRA_FIELD_H_
#define VSAGG_ALGEBRA_FIELD_H_

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>

#include "vsagg/common/random.h"
#include "vsagg/common/types.h"

namespace vsagg::algebra {

class FieldElement;
class PrimeField;

using FieldPtr = std::shared_ptr<const PrimeField>;

// Z_p for a prime p. Elements keep a shared reference to their field so that
// mixing moduli is caught at the operation instead of silently wrapping.
class PrimeField : public std::enable_shared_from_this<PrimeField> {
 public:
  // Rejects composite moduli (Miller-Rabin, 40 rounds) and p < 2.
  static FieldPtr create(const mpz_class& p);
  static FieldPtr create(std::uint64_t p) { return create(mpz_class(std::to_string(p))); }

  // The default modulus: 2^130 - 5, a fixed 130-bit prime.
  static FieldPtr default_field();
  // 2^61 - 1.
  static FieldPtr mersenne61();

  const mpz_class& modulus() const { return p_; }
  std::size_t bits() const { return bits_; }
  std::size_t byte_length() const { return (bits_ + 7) / 8; }

  FieldElement element(const mpz_class& value) const;
  FieldElement element(std::int64_t value) const;
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement random(Rng& rng) const;
  FieldElement random_nonzero(Rng& rng) const;

  // Two fields are interchangeable iff they share the modulus.
  bool same_as(const PrimeField& other) const {
    return this == &other || p_ == other.p_;
  }

 private:
  struct Token {};

 public:
  PrimeField(Token, mpz_class p);

 private:
  mpz_class p_;
  std::size_t bits_;
};

class FieldElement {
 public:
  // An unbound element; any arithmetic on it raises ModulusMismatch.
  FieldElement() = default;
  FieldElement(FieldPtr field, const mpz_class& value);

  const mpz_class& value() const { return value_; }
  const FieldPtr& field() const { return field_; }
  bool is_bound() const { return field_ != nullptr; }
  bool is_zero() const { return value_ == 0; }

  // Throws ZeroInverse for the zero element.
  FieldElement inverse() const;
  FieldElement pow(const mpz_class& exponent) const;

  // Fixed-width big-endian encoding (field byte length).
  Bytes to_bytes() const;
  std::string to_string() const { return value_.get_str(); }
  // Centered lift into (-p/2, p/2].
  mpz_class signed_value() const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement operator-() const;

  // Equality compares value and modulus; elements of different fields are
  // never equal.
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
    return os << e.value_.get_str();
  }

 private:
  void check_same_field(const FieldElement& o) const;

  FieldPtr field_;
  mpz_class value_;
};

// a^{-1} mod p.
FieldElement field_inv(const FieldElement& a);

}  // namespace vsagg::algebra

#endif  // VSAGG_ALGEBRA_FIELD_H_
