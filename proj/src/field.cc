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

#include "projstark/field.h"

#include "projstark/errors.h"

namespace projstark {

namespace {

uint64_t MulMod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t PowMod(uint64_t base, uint64_t exponent, uint64_t m) {
  uint64_t result = 1 % m;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1) result = MulMod(result, base, m);
    base = MulMod(base, base, m);
    exponent >>= 1;
  }
  return result;
}

}  // namespace

PrimeField::PrimeField(uint64_t modulus) : modulus_(modulus) {
  if (modulus < 3 || modulus > kMaxModulus || !IsPrime(modulus)) {
    Throw(ErrorCode::kNotPrime,
          "field modulus " + std::to_string(modulus) + " is not a prime in [3, 2^62]");
  }
}

bool PrimeField::IsPrime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldElement PrimeField::Zero() const { return FieldElement(0, modulus_); }
FieldElement PrimeField::One() const { return FieldElement(1, modulus_); }

FieldElement PrimeField::FromInt(int64_t value) const {
  const auto m = static_cast<__int128>(modulus_);
  __int128 r = static_cast<__int128>(value) % m;
  if (r < 0) r += m;
  return FieldElement(static_cast<uint64_t>(r), modulus_);
}

FieldElement PrimeField::FromCanonical(uint64_t value) const {
  if (value >= modulus_) {
    Throw(ErrorCode::kOverflow, "value " + std::to_string(value) +
                                    " is not a canonical residue mod " +
                                    std::to_string(modulus_));
  }
  return FieldElement(value, modulus_);
}

void FieldElement::CheckSameField(const FieldElement& other) const {
  if (modulus_ != other.modulus_) {
    Throw(ErrorCode::kMismatchedFields, "operands belong to F_" + std::to_string(modulus_) +
                                            " and F_" + std::to_string(other.modulus_));
  }
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
  CheckSameField(other);
  uint64_t s = value_ + other.value_;  // both < 2^62, no wrap
  if (s >= modulus_) s -= modulus_;
  return FieldElement(s, modulus_);
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
  CheckSameField(other);
  uint64_t d = value_ >= other.value_ ? value_ - other.value_ : value_ + modulus_ - other.value_;
  return FieldElement(d, modulus_);
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
  CheckSameField(other);
  return FieldElement(MulMod(value_, other.value_, modulus_), modulus_);
}

FieldElement FieldElement::operator/(const FieldElement& other) const {
  CheckSameField(other);
  return *this * other.Inverse();
}

FieldElement FieldElement::operator-() const {
  return FieldElement(value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

FieldElement FieldElement::Pow(uint64_t exponent) const {
  return FieldElement(PowMod(value_, exponent, modulus_), modulus_);
}

FieldElement FieldElement::Inverse() const {
  if (value_ == 0) Throw(ErrorCode::kDivisionByZero, "inverse of zero");
  return Pow(modulus_ - 2);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.CheckSameField(b);
  return a.value_ == b.value_;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.value(); }

std::vector<uint64_t> PrimeFactors(uint64_t n) {
  std::vector<uint64_t> factors;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      factors.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

CyclicDomain::CyclicDomain(FieldElement generator, std::vector<FieldElement> elements)
    : generator_(generator), elements_(std::move(elements)) {
  for (size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k].value(), k);
}

CyclicDomain CyclicDomain::Build(const PrimeField& field, uint64_t order) {
  const uint64_t q = field.modulus();
  if (order == 0 || (q - 1) % order != 0) {
    Throw(ErrorCode::kNoSubgroup, "no subgroup of order " + std::to_string(order) + " in F_" +
                                      std::to_string(q) + "^*");
  }
  if (order == 1) return CyclicDomain(field.One(), {field.One()});

  const std::vector<uint64_t> primes = PrimeFactors(order);
  auto has_exact_order = [&](const FieldElement& h) {
    if (h.Pow(order).value() != 1) return false;
    for (uint64_t p : primes) {
      if (h.Pow(order / p).value() == 1) return false;
    }
    return true;
  };

  for (uint64_t candidate = 2; candidate < q; ++candidate) {
    FieldElement h = field.FromCanonical(candidate);
    if (!has_exact_order(h)) continue;
    std::vector<FieldElement> elements;
    elements.reserve(order);
    FieldElement power = field.One();
    for (uint64_t k = 0; k < order; ++k) {
      elements.push_back(power);
      power *= h;
    }
    return CyclicDomain(h, std::move(elements));
  }
  // Unreachable for prime q: F_q^* is cyclic.
  Throw(ErrorCode::kNoSubgroup, "no generator found");
}

bool CyclicDomain::Contains(const FieldElement& x) const {
  return x.modulus() == generator_.modulus() && index_.count(x.value()) > 0;
}

std::optional<size_t> CyclicDomain::IndexOf(const FieldElement& x) const {
  if (x.modulus() != generator_.modulus()) return std::nullopt;
  auto it = index_.find(x.value());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace projstark
