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

#ifndef PROJSTARK_POLYNOMIAL_H_
#define PROJSTARK_POLYNOMIAL_H_

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "projstark/field.h"

namespace projstark {

// Dense univariate polynomial over F_q, coefficient i multiplies x^i.
// Trailing zero coefficients are always trimmed, so the zero polynomial has no
// coefficients.
class Polynomial {
 public:
  // Degree of the zero polynomial. Compares below every real degree, so the
  // zero polynomial satisfies any degree bound.
  static constexpr int64_t kNegInfDegree = std::numeric_limits<int64_t>::min();

  explicit Polynomial(const PrimeField& field) : modulus_(field.modulus()) {}
  Polynomial(const PrimeField& field, std::vector<FieldElement> coefficients);
  static Polynomial FromInts(const PrimeField& field, const std::vector<int64_t>& coefficients);
  static Polynomial Constant(const FieldElement& c);
  // The monic linear polynomial x - root.
  static Polynomial Linear(const FieldElement& root);

  PrimeField field() const { return PrimeField(modulus_); }
  const std::vector<FieldElement>& coefficients() const { return coeffs_; }
  // Zero for indices past the leading coefficient.
  FieldElement coefficient(size_t i) const;
  int64_t degree() const {
    return coeffs_.empty() ? kNegInfDegree : static_cast<int64_t>(coeffs_.size()) - 1;
  }
  bool IsZero() const { return coeffs_.empty(); }
  bool DegreeAtMost(int64_t bound) const { return degree() <= bound; }

  // Horner evaluation.
  FieldElement Evaluate(const FieldElement& x) const;
  std::vector<FieldElement> EvaluateMany(std::span<const FieldElement> xs) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial Scale(const FieldElement& c) const;
  // Returns p(c * x), computed as coefficient i times c^i.
  Polynomial ComposeScaled(const FieldElement& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Ascending base-10 coefficients, e.g. "[72, 260, 273]".
  std::string ToString() const;

 private:
  void Trim();
  void CheckSameField(const Polynomial& other) const;

  uint64_t modulus_;
  std::vector<FieldElement> coeffs_;
};

// Unique polynomial of degree < xs.size() through the points (xs[k], ys[k]).
// Throws kDuplicatePoint on repeated x, kDimensionMismatch on length mismatch.
Polynomial Interpolate(std::span<const FieldElement> xs, std::span<const FieldElement> ys);

// Monic polynomial with exactly the given roots. Throws kDuplicatePoint.
Polynomial Vanishing(std::span<const FieldElement> points);

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
  bool remainder_zero() const { return remainder.IsZero(); }
};

// Long division. Throws kDivisionByZero when den is the zero polynomial.
DivisionResult DivideExact(const Polynomial& num, const Polynomial& den);

}  // namespace projstark

#endif  // PROJSTARK_POLYNOMIAL_H_
