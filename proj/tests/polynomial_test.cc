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

#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "projstark/dynamics.h"
#include "projstark/worked_example.h"
#include "test_support.h"

namespace projstark {
namespace {

using testing_support::CodeOf;

class PolynomialTest : public ::testing::Test {
 protected:
  PrimeField f{331};
  FieldElement E(int64_t v) const { return f.FromInt(v); }
  Polynomial P(std::vector<int64_t> c) const { return Polynomial::FromInts(f, c); }
  Polynomial Random(std::mt19937_64& rng, size_t degree) const {
    std::vector<FieldElement> c;
    for (size_t i = 0; i < degree; ++i) c.push_back(f.FromCanonical(rng() % 331));
    c.push_back(f.FromCanonical(1 + rng() % 330));
    return Polynomial(f, c);
  }
  std::vector<FieldElement> Domain(size_t order) const {
    return CyclicDomain::Build(f, order).elements();
  }
};

// Direct sum of Lagrange basis terms evaluated at one point.
FieldElement LagrangeAt(const std::vector<FieldElement>& xs, const std::vector<FieldElement>& ys,
                        const FieldElement& at) {
  FieldElement sum = at.field().Zero();
  for (size_t j = 0; j < xs.size(); ++j) {
    FieldElement term = ys[j];
    for (size_t m = 0; m < xs.size(); ++m) {
      if (m != j) term = term * (at - xs[m]) / (xs[j] - xs[m]);
    }
    sum = sum + term;
  }
  return sum;
}

TEST_F(PolynomialTest, TrimsAndReportsDegree) {
  EXPECT_EQ(P({1, 2, 0, 0}).degree(), 1);
  EXPECT_TRUE(P({0, 0}).IsZero());
  EXPECT_EQ(P({}).degree(), Polynomial::kNegInfDegree);
  EXPECT_TRUE(P({}).DegreeAtMost(-1000));
  EXPECT_EQ(P({331, 662}).degree(), Polynomial::kNegInfDegree);
}

TEST_F(PolynomialTest, Evaluate) {
  EXPECT_EQ(P({}).Evaluate(E(5)), E(0));
  EXPECT_EQ(P({1, 1}).Evaluate(E(330)), E(0));
  EXPECT_EQ(P({2, 0, 3}).Evaluate(E(10)), E(302));
}

TEST_F(PolynomialTest, Arithmetic) {
  EXPECT_TRUE((P({4, 5}) * P({})).IsZero());
  EXPECT_EQ(P({1, 1}) * P({-1, 1}), P({-1, 0, 1}));
  EXPECT_EQ(P({1, 2}) + P({-1, -2}), P({}));
  EXPECT_EQ(P({5}) - P({0, 1}), P({5, -1}));
  EXPECT_EQ(P({1, 2}).Scale(E(3)), P({3, 6}));
  EXPECT_EQ(-P({1, 2}), P({-1, -2}));
  EXPECT_EQ(P({1, 2, 3}).ComposeScaled(E(2)), P({1, 4, 12}));
  EXPECT_EQ(P({72, 260}).ToString(), "[72, 260]");
}

TEST_F(PolynomialTest, ProductDegreeAdds) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const size_t da = rng() % 20, db = rng() % 20;
    EXPECT_EQ((Random(rng, da) * Random(rng, db)).degree(), static_cast<int64_t>(da + db));
  }
}

TEST_F(PolynomialTest, ComposeScaledEvaluatesAtScaledPoint) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const Polynomial p = Random(rng, rng() % 30);
    const FieldElement c = E(rng() % 331), x = E(rng() % 331);
    EXPECT_EQ(p.ComposeScaled(c).Evaluate(x), p.Evaluate(c * x));
  }
}

TEST_F(PolynomialTest, InterpolateConstantColumn) {
  const auto xs = Domain(30);
  const std::vector<FieldElement> ys(30, E(3));
  EXPECT_EQ(Interpolate(xs, ys), P({3}));
}

TEST_F(PolynomialTest, InterpolateReferenceStateColumn) {
  const ExecutionTrace t = Simulate(worked_example::System());
  std::vector<FieldElement> ys;
  for (const auto& row : t.z_rows) ys.push_back(E(row[1]));
  EXPECT_EQ(Interpolate(Domain(30), ys).degree(), 29);
}

TEST_F(PolynomialTest, InterpolationRoundTripAndOracle) {
  std::mt19937_64 rng(9);
  for (size_t order : {1u, 2u, 3u, 5u, 10u, 30u, 66u}) {
    const auto xs = Domain(order);
    std::vector<FieldElement> ys;
    for (size_t k = 0; k < order; ++k) ys.push_back(E(rng() % 331));
    const Polynomial p = Interpolate(xs, ys);
    EXPECT_LE(p.degree(), static_cast<int64_t>(order) - 1);
    for (size_t k = 0; k < order; ++k) EXPECT_EQ(p.Evaluate(xs[k]), ys[k]);
    for (int s = 0; s < 5; ++s) {
      const FieldElement at = E(rng() % 331);
      EXPECT_EQ(p.Evaluate(at), LagrangeAt(xs, ys, at));
    }
  }
}

TEST_F(PolynomialTest, InterpolateErrors) {
  const std::vector<FieldElement> xs = {E(1), E(2), E(1)}, ys = {E(0), E(0), E(0)};
  EXPECT_EQ(CodeOf([&] { Interpolate(xs, ys); }), ErrorCode::kDuplicatePoint);
  const std::vector<FieldElement> short_ys = {E(0)};
  EXPECT_EQ(CodeOf([&] { Interpolate(std::span(xs).first(2), short_ys); }),
            ErrorCode::kDimensionMismatch);
}

TEST_F(PolynomialTest, VanishingOverFullSubgroup) {
  const auto s = Domain(30);
  std::vector<int64_t> expect(31, 0);
  expect[0] = -1;
  expect[30] = 1;
  EXPECT_EQ(Vanishing(s), P(expect));
}

TEST_F(PolynomialTest, VanishingWithoutLastPoint) {
  const auto s = Domain(30);
  const Polynomial v = Vanishing(std::span(s).first(29));
  EXPECT_EQ(v * Polynomial::Linear(E(166)), Vanishing(s));
}

TEST_F(PolynomialTest, VanishingSinglePoint) {
  const std::vector<FieldElement> one = {E(1)};
  EXPECT_EQ(Vanishing(one), P({-1, 1}));
  const std::vector<FieldElement> dup = {E(4), E(4)};
  EXPECT_EQ(CodeOf([&] { Vanishing(dup); }), ErrorCode::kDuplicatePoint);
}

TEST_F(PolynomialTest, VanishingRootsExactly) {
  const auto s = Domain(30);
  const Polynomial v = Vanishing(s);
  for (const auto& x : s) EXPECT_TRUE(v.Evaluate(x).IsZero());
  for (int64_t x : {3, 5, 87, 291, 100}) EXPECT_FALSE(v.Evaluate(E(x)).IsZero()) << x;
}

TEST_F(PolynomialTest, DivideExact) {
  const DivisionResult r = DivideExact(P({-1, 0, 1}), P({-1, 1}));
  EXPECT_TRUE(r.remainder_zero());
  EXPECT_EQ(r.quotient, P({1, 1}));
  const DivisionResult inexact = DivideExact(P({0, 0, 1}), P({-1, 1}));
  EXPECT_FALSE(inexact.remainder_zero());
  EXPECT_EQ(inexact.remainder, P({1}));
  EXPECT_EQ(CodeOf([&] { DivideExact(P({1}), P({})); }), ErrorCode::kDivisionByZero);
}

TEST_F(PolynomialTest, DivideExactRecoversFactor) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const Polynomial a = Random(rng, rng() % 40), b = Random(rng, rng() % 20);
    const DivisionResult r = DivideExact(a * b, b);
    EXPECT_TRUE(r.remainder_zero());
    EXPECT_EQ(r.quotient, a);
  }
}

TEST_F(PolynomialTest, DivisionIdentity) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 100; ++t) {
    const Polynomial a = Random(rng, rng() % 40), b = Random(rng, rng() % 20);
    const DivisionResult r = DivideExact(a, b);
    EXPECT_EQ(r.quotient * b + r.remainder, a);
    EXPECT_LT(r.remainder.degree(), b.degree());
  }
}

}  // namespace
}  // namespace projstark
