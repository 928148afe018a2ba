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

#include "projstark/fri.h"

#include <random>
#include <set>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "projstark/worked_example.h"
#include "test_support.h"

namespace projstark {
namespace {

using ::testing::ElementsAreArray;
using testing_support::CodeOf;

class FriTest : public ::testing::Test {
 protected:
  PrimeField f{331};
  CyclicDomain domain = CyclicDomain::Build(f, 30);
  EvaluationDomain d0 = EvaluationDomain::LayerZero(domain);

  FieldElement E(int64_t v) const { return f.FromInt(v); }
  Polynomial FromList(std::span<const uint64_t> c) const {
    std::vector<FieldElement> v;
    for (uint64_t x : c) v.push_back(f.FromCanonical(x));
    return Polynomial(f, v);
  }
  Polynomial Reference() const { return FromList(worked_example::kCombined); }
  std::vector<FieldElement> Betas() const {
    std::vector<FieldElement> b;
    for (uint64_t x : worked_example::kBetas) b.push_back(f.FromCanonical(x));
    return b;
  }
  Polynomial Random(std::mt19937_64& rng, size_t degree) const {
    std::vector<FieldElement> c;
    for (size_t i = 0; i < degree; ++i) c.push_back(f.FromCanonical(rng() % 331));
    c.push_back(f.FromCanonical(1 + rng() % 330));
    return Polynomial(f, c);
  }
  static std::vector<uint64_t> Values(const Polynomial& p) {
    std::vector<uint64_t> out;
    for (const auto& c : p.coefficients()) out.push_back(c.value());
    return out;
  }
};

TEST_F(FriTest, SplitEvenOdd) {
  const EvenOddParts parts = SplitEvenOdd(Polynomial::FromInts(f, {1, 2, 3, 4}));
  EXPECT_EQ(parts.even, Polynomial::FromInts(f, {1, 3}));
  EXPECT_EQ(parts.odd, Polynomial::FromInts(f, {2, 4}));
  const EvenOddParts c = SplitEvenOdd(Polynomial::FromInts(f, {9}));
  EXPECT_EQ(c.even, Polynomial::FromInts(f, {9}));
  EXPECT_TRUE(c.odd.IsZero());
  const EvenOddParts r = SplitEvenOdd(Reference());
  EXPECT_EQ(r.even.degree(), 14);
  EXPECT_EQ(r.odd.degree(), 13);
}

TEST_F(FriTest, FoldingIdentities) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const Polynomial q = Random(rng, rng() % 65);
    const EvenOddParts parts = SplitEvenOdd(q);
    const FieldElement beta = E(1 + rng() % 330);
    const Polynomial folded = Fold(q, beta);
    for (int s = 0; s < 10; ++s) {
      const FieldElement x = E(rng() % 331);
      EXPECT_EQ(q.Evaluate(x), parts.even.Evaluate(x * x) + x * parts.odd.Evaluate(x * x));
      EXPECT_EQ(folded.Evaluate(x * x),
                parts.even.Evaluate(x * x) + beta * parts.odd.Evaluate(x * x));
    }
  }
}

TEST_F(FriTest, FoldHalvesDegree) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 300; ++t) {
    const int64_t d = static_cast<int64_t>(rng() % 65);
    const Polynomial folded = Fold(Random(rng, d), E(1 + rng() % 330));
    EXPECT_LE(folded.degree(), d / 2);
  }
  EXPECT_EQ(Fold(Polynomial::FromInts(f, {7}), E(123)), Polynomial::FromInts(f, {7}));
}

TEST_F(FriTest, ReferenceFolds) {
  const auto betas = Betas();
  Polynomial q = Fold(Reference(), betas[0]);
  EXPECT_THAT(Values(q), ElementsAreArray(worked_example::kLayer1));
  q = Fold(q, betas[1]);
  EXPECT_THAT(Values(q), ElementsAreArray(worked_example::kLayer2));
  q = Fold(q, betas[2]);
  EXPECT_THAT(Values(q), ElementsAreArray(worked_example::kLayer3));
  q = Fold(q, betas[3]);
  EXPECT_THAT(Values(q), ElementsAreArray(worked_example::kLayer4));
  q = Fold(q, betas[4]);
  EXPECT_THAT(Values(q), ElementsAreArray({worked_example::kFinalConstant}));
}

TEST_F(FriTest, FoldingRounds) {
  EXPECT_EQ(FoldingRounds(28), 5u);
  EXPECT_EQ(FoldingRounds(56), 6u);
  EXPECT_EQ(FoldingRounds(32), 6u);
  EXPECT_EQ(FoldingRounds(2), 2u);
  EXPECT_EQ(FoldingRounds(1), 1u);
  EXPECT_EQ(FoldingRounds(0), 1u);
}

TEST_F(FriTest, CommitPhaseReference) {
  const auto layers = CommitPhase(Reference(), 28, d0, Betas());
  ASSERT_EQ(layers.size(), 6u);
  std::vector<int64_t> degrees;
  for (size_t j = 1; j < layers.size(); ++j) degrees.push_back(layers[j].poly.degree());
  EXPECT_THAT(degrees, ElementsAreArray(worked_example::kLayerDegrees));
  EXPECT_EQ(layers.back().poly.coefficient(0).value(), 229u);
  EXPECT_FALSE(layers.back().beta.has_value());
  EXPECT_EQ(layers[0].eval_domain.size(), 300u);
  EXPECT_EQ(layers[1].eval_domain.size(), layers[0].eval_domain.Squared().size());
}

TEST_F(FriTest, CommitPhaseRejectsDegreeAboveBound) {
  std::mt19937_64 rng(3);
  int failed = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<FieldElement> betas;
    for (int j = 0; j < 5; ++j) betas.push_back(E(1 + rng() % 330));
    const Polynomial q = Random(rng, 29);
    try {
      CommitPhase(q, 28, d0, betas);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kDegreeTestFailed);
      ++failed;
    }
  }
  EXPECT_GE(failed, 95);
}

TEST_F(FriTest, CommitPhaseConstant) {
  const auto layers = CommitPhase(Polynomial::FromInts(f, {5}), 1, d0, {E(9)});
  EXPECT_EQ(layers.size(), 2u);
  EXPECT_EQ(layers[1].poly, Polynomial::FromInts(f, {5}));
}

TEST_F(FriTest, CommitPhaseNeedsEnoughBetas) {
  EXPECT_EQ(CodeOf([&] { CommitPhase(Reference(), 28, d0, {E(1), E(2)}); }),
            ErrorCode::kTranscriptExhausted);
}

TEST_F(FriTest, ReferenceQueryChains) {
  const auto layers = CommitPhase(Reference(), 28, d0, Betas());
  const FriQueryResult r87 = QueryCheck(layers, AnswerQuery(layers, E(87)));
  EXPECT_TRUE(r87.accepted);
  std::vector<uint64_t> got;
  for (const auto& v : r87.computed) got.push_back(v.value());
  EXPECT_THAT(got, ElementsAreArray(worked_example::kChainAt87));
  const FriQueryResult r291 = QueryCheck(layers, AnswerQuery(layers, E(291)));
  EXPECT_TRUE(r291.accepted);
  got.clear();
  for (const auto& v : r291.computed) got.push_back(v.value());
  EXPECT_THAT(got, ElementsAreArray(worked_example::kChainAt291));
}

TEST_F(FriTest, PerturbedLayerValueRejected) {
  const auto layers = CommitPhase(Reference(), 28, d0, Betas());
  FriQueryAnswer a = AnswerQuery(layers, E(87));
  a.layer_values[1].first += f.One();
  const FriQueryResult r = QueryCheck(layers, a);
  EXPECT_FALSE(r.accepted);
  EXPECT_EQ(r.failed_layer, 1u);

  FriQueryAnswer b = AnswerQuery(layers, E(87));
  b.final_value += f.One();
  const FriQueryResult rb = QueryCheck(layers, b);
  EXPECT_FALSE(rb.accepted);
  EXPECT_EQ(rb.failed_layer, 5u);
}

TEST_F(FriTest, CompleteOverWholeQueryDomain) {
  const auto layers = CommitPhase(Reference(), 28, d0, Betas());
  for (const FieldElement& x : d0.points()) {
    EXPECT_TRUE(QueryCheck(layers, AnswerQuery(layers, x)).accepted) << x;
  }
}

// Swapping one folded layer for an unrelated polynomial of the same degree
// must be caught by most single queries.
TEST_F(FriTest, ReplacedLayerCaughtByMostQueries) {
  std::mt19937_64 rng(4);
  for (size_t layer = 1; layer <= 3; ++layer) {
    auto layers = CommitPhase(Reference(), 28, d0, Betas());
    layers[layer].poly = Random(rng, static_cast<size_t>(layers[layer].poly.degree()));
    size_t rejected = 0, total = 0;
    for (int t = 0; t < 400; ++t) {
      const FieldElement x = d0.points()[rng() % d0.size()];
      rejected += !QueryCheck(layers, AnswerQuery(layers, x)).accepted;
      ++total;
    }
    EXPECT_GE(static_cast<double>(rejected) / total, 0.90) << "layer " << layer;
  }
}

TEST_F(FriTest, LayerZeroExcludesTraceDomain) {
  EXPECT_EQ(d0.size(), 300u);
  for (const FieldElement& x : d0.points()) {
    EXPECT_FALSE(domain.Contains(x));
    EXPECT_TRUE(d0.Contains(-x));
  }
  EXPECT_TRUE(d0.Contains(E(87)));
  EXPECT_TRUE(d0.Contains(E(291)));
  EXPECT_EQ(d0.IndexOf(E(1)), std::nullopt);
  // Odd order: the negated subgroup is excluded as well.
  const CyclicDomain odd = CyclicDomain::Build(f, 15);
  EXPECT_EQ(EvaluationDomain::LayerZero(odd).size(), 330u - 30u);
}

TEST_F(FriTest, SquaredDomainIsClosed) {
  EvaluationDomain d = d0;
  for (int j = 0; j < 6; ++j) {
    const EvaluationDomain next = d.Squared();
    for (const FieldElement& x : d.points()) EXPECT_TRUE(next.Contains(x * x));
    for (const FieldElement& y : next.points()) EXPECT_TRUE(next.Contains(-y));
    for (size_t k = 1; k < next.size(); ++k) {
      EXPECT_LT(next.points()[k - 1].value(), next.points()[k].value());
    }
    d = next;
  }
}

TEST_F(FriTest, LayerZeroNeedsRoom) {
  const PrimeField small(7);
  EXPECT_EQ(CodeOf([&] { EvaluationDomain::LayerZero(CyclicDomain::Build(small, 6)); }),
            ErrorCode::kNoSubgroup);
}

}  // namespace
}  // namespace projstark
