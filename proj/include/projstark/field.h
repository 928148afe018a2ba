// Copyright 2026 The projstark Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROJSTARK_FIELD_H_
#define PROJSTARK_FIELD_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

namespace projstark {

class FieldElement;

// The prime field F_q. Cheap to copy; two fields are the same field iff their
// moduli are equal.
class PrimeField {
 public:
  // Largest modulus accepted. Products are computed in 128-bit arithmetic, so
  // this is a sanity bound rather than an arithmetic one.
  static constexpr uint64_t kMaxModulus = (uint64_t{1} << 62);

  // Throws kNotPrime if q is composite or q < 3.
  explicit PrimeField(uint64_t modulus);

  static bool IsPrime(uint64_t n);

  uint64_t modulus() const { return modulus_; }

  FieldElement Zero() const;
  FieldElement One() const;
  // Reduces any signed integer to its canonical residue (-1 -> q-1).
  FieldElement FromInt(int64_t value) const;
  // Throws kOverflow unless value < q.
  FieldElement FromCanonical(uint64_t value) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.modulus_ == b.modulus_;
  }

 private:
  uint64_t modulus_;
};

class FieldElement {
 public:
  FieldElement(uint64_t canonical_value, uint64_t modulus)
      : value_(canonical_value), modulus_(modulus) {}

  uint64_t value() const { return value_; }
  uint64_t modulus() const { return modulus_; }
  PrimeField field() const { return PrimeField(modulus_); }
  bool IsZero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& other) const;
  FieldElement operator-(const FieldElement& other) const;
  FieldElement operator*(const FieldElement& other) const;
  // Throws kDivisionByZero on a zero divisor.
  FieldElement operator/(const FieldElement& other) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other) { return *this = *this + other; }
  FieldElement& operator-=(const FieldElement& other) { return *this = *this - other; }
  FieldElement& operator*=(const FieldElement& other) { return *this = *this * other; }

  // Square-and-multiply; Pow(0) is one, including for zero.
  FieldElement Pow(uint64_t exponent) const;
  // Fermat inversion. Throws kDivisionByZero on zero.
  FieldElement Inverse() const;

  // Equality across different fields is a usage error and throws.
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  std::string ToString() const { return std::to_string(value_); }

 private:
  void CheckSameField(const FieldElement& other) const;

  uint64_t value_;
  uint64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

// The multiplicative subgroup {g^0, ..., g^(n-1)} of F_q^*.
class CyclicDomain {
 public:
  // Throws kNoSubgroup unless order divides q - 1. The generator is the
  // smallest h >= 2 of exact multiplicative order `order` (1 when order is 1).
  static CyclicDomain Build(const PrimeField& field, uint64_t order);

  const FieldElement& generator() const { return generator_; }
  uint64_t order() const { return elements_.size(); }
  const std::vector<FieldElement>& elements() const { return elements_; }
  const FieldElement& operator[](size_t k) const { return elements_[k]; }
  PrimeField field() const { return generator_.field(); }

  bool Contains(const FieldElement& x) const;
  std::optional<size_t> IndexOf(const FieldElement& x) const;

 private:
  CyclicDomain(FieldElement generator, std::vector<FieldElement> elements);

  FieldElement generator_;
  std::vector<FieldElement> elements_;
  std::unordered_map<uint64_t, size_t> index_;
};

// Distinct prime factors in increasing order (trial division).
std::vector<uint64_t> PrimeFactors(uint64_t n);

}  // namespace projstark

#endif  // PROJSTARK_FIELD_H_
