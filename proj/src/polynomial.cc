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

#include "projstark/polynomial.h"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "projstark/errors.h"

namespace projstark {

Polynomial::Polynomial(const PrimeField& field, std::vector<FieldElement> coefficients)
    : modulus_(field.modulus()), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) {
    if (c.modulus() != modulus_) Throw(ErrorCode::kMismatchedFields, "coefficient field mismatch");
  }
  Trim();
}

Polynomial Polynomial::FromInts(const PrimeField& field, const std::vector<int64_t>& coefficients) {
  std::vector<FieldElement> coeffs;
  coeffs.reserve(coefficients.size());
  for (int64_t c : coefficients) coeffs.push_back(field.FromInt(c));
  return Polynomial(field, std::move(coeffs));
}

Polynomial Polynomial::Constant(const FieldElement& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::Linear(const FieldElement& root) {
  return Polynomial(root.field(), {-root, root.field().One()});
}

void Polynomial::Trim() {
  while (!coeffs_.empty() && coeffs_.back().IsZero()) coeffs_.pop_back();
}

void Polynomial::CheckSameField(const Polynomial& other) const {
  if (modulus_ != other.modulus_) Throw(ErrorCode::kMismatchedFields, "polynomial field mismatch");
}

FieldElement Polynomial::coefficient(size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : FieldElement(0, modulus_);
}

FieldElement Polynomial::Evaluate(const FieldElement& x) const {
  if (x.modulus() != modulus_) Throw(ErrorCode::kMismatchedFields, "evaluation point field mismatch");
  FieldElement acc(0, modulus_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<FieldElement> Polynomial::EvaluateMany(std::span<const FieldElement> xs) const {
  std::vector<FieldElement> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(Evaluate(x));
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  CheckSameField(other);
  std::vector<FieldElement> out;
  const size_t n = std::max(coeffs_.size(), other.coeffs_.size());
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(coefficient(i) + other.coefficient(i));
  return Polynomial(field(), std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator-() const {
  std::vector<FieldElement> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(-c);
  return Polynomial(field(), std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  CheckSameField(other);
  if (IsZero() || other.IsZero()) return Polynomial(field());
  std::vector<FieldElement> out(coeffs_.size() + other.coeffs_.size() - 1,
                                FieldElement(0, modulus_));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    for (size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return Polynomial(field(), std::move(out));
}

Polynomial Polynomial::Scale(const FieldElement& c) const {
  std::vector<FieldElement> out;
  out.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.push_back(a * c);
  return Polynomial(field(), std::move(out));
}

Polynomial Polynomial::ComposeScaled(const FieldElement& c) const {
  std::vector<FieldElement> out;
  out.reserve(coeffs_.size());
  FieldElement power(1, modulus_);
  for (const auto& a : coeffs_) {
    out.push_back(a * power);
    power *= c;
  }
  return Polynomial(field(), std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  a.CheckSameField(b);
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].value() != b.coeffs_[i].value()) return false;
  }
  return true;
}

std::string Polynomial::ToString() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : "") << coeffs_[i].value();
  os << ']';
  return os.str();
}

namespace {

void CheckDistinct(std::span<const FieldElement> points) {
  std::unordered_set<uint64_t> seen;
  for (const auto& p : points) {
    if (!seen.insert(p.value()).second) {
      Throw(ErrorCode::kDuplicatePoint, "duplicate point " + p.ToString());
    }
  }
}

// Divides by the monic factor (x - root), assuming root is a root of p.
Polynomial DivideByLinear(const Polynomial& p, const FieldElement& root) {
  const auto& c = p.coefficients();
  if (c.empty()) return p;
  std::vector<FieldElement> out(c.size() - 1, root.field().Zero());
  FieldElement carry = root.field().Zero();
  for (size_t i = c.size() - 1; i > 0; --i) {
    carry = c[i] + carry * root;
    out[i - 1] = carry;
  }
  return Polynomial(root.field(), std::move(out));
}

}  // namespace

Polynomial Vanishing(std::span<const FieldElement> points) {
  CheckDistinct(points);
  if (points.empty()) Throw(ErrorCode::kEmptyTable, "vanishing polynomial of no points");
  Polynomial acc = Polynomial::Constant(points.front().field().One());
  for (const auto& p : points) acc = acc * Polynomial::Linear(p);
  return acc;
}

Polynomial Interpolate(std::span<const FieldElement> xs, std::span<const FieldElement> ys) {
  if (xs.size() != ys.size()) {
    Throw(ErrorCode::kDimensionMismatch, "interpolation needs as many values as points");
  }
  if (xs.empty()) Throw(ErrorCode::kEmptyTable, "interpolation through no points");
  const PrimeField field = xs.front().field();
  // Lagrange form: sum_k y_k * Z(x) / ((x - x_k) * Z'(x_k)), Z the vanishing polynomial.
  const Polynomial all = Vanishing(xs);
  Polynomial result(field);
  for (size_t k = 0; k < xs.size(); ++k) {
    if (ys[k].IsZero()) continue;
    Polynomial basis = DivideByLinear(all, xs[k]);
    FieldElement denom = basis.Evaluate(xs[k]);
    result = result + basis.Scale(ys[k] / denom);
  }
  return result;
}

DivisionResult DivideExact(const Polynomial& num, const Polynomial& den) {
  if (den.IsZero()) Throw(ErrorCode::kDivisionByZero, "division by the zero polynomial");
  const PrimeField field = num.field();
  if (!(field == den.field())) Throw(ErrorCode::kMismatchedFields, "polynomial field mismatch");
  std::vector<FieldElement> rem = num.coefficients();
  const auto& d = den.coefficients();
  if (rem.size() < d.size()) return {Polynomial(field), num};

  std::vector<FieldElement> quot(rem.size() - d.size() + 1, field.Zero());
  const FieldElement lead_inv = d.back().Inverse();
  for (size_t shift = quot.size(); shift-- > 0;) {
    const FieldElement c = rem[shift + d.size() - 1] * lead_inv;
    quot[shift] = c;
    if (c.IsZero()) continue;
    for (size_t i = 0; i < d.size(); ++i) rem[shift + i] -= c * d[i];
  }
  rem.resize(d.size() - 1, field.Zero());
  return {Polynomial(field, std::move(quot)), Polynomial(field, std::move(rem))};
}

}  // namespace projstark
