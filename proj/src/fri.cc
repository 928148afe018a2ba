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

#include <algorithm>
#include <bit>

#include "projstark/errors.h"

namespace projstark {

EvaluationDomain::EvaluationDomain(const PrimeField& field, std::vector<FieldElement> points)
    : modulus_(field.modulus()), points_(std::move(points)) {
  for (size_t k = 0; k < points_.size(); ++k) {
    if (!index_.emplace(points_[k].value(), k).second) {
      Throw(ErrorCode::kDuplicatePoint, "evaluation domain repeats " + points_[k].ToString());
    }
  }
}

EvaluationDomain EvaluationDomain::LayerZero(const CyclicDomain& trace_domain) {
  const PrimeField field = trace_domain.field();
  std::vector<FieldElement> points;
  for (uint64_t v = 1; v < field.modulus(); ++v) {
    const FieldElement x = field.FromCanonical(v);
    if (trace_domain.Contains(x) || trace_domain.Contains(-x)) continue;
    points.push_back(x);
  }
  if (points.empty()) {
    Throw(ErrorCode::kNoSubgroup, "trace domain leaves no sample points in F_q^*");
  }
  return EvaluationDomain(field, std::move(points));
}

EvaluationDomain EvaluationDomain::Squared() const {
  std::vector<uint64_t> values;
  values.reserve(2 * points_.size());
  for (const auto& x : points_) {
    const FieldElement y = x * x;
    values.push_back(y.value());
    values.push_back((-y).value());
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const PrimeField field(modulus_);
  std::vector<FieldElement> points;
  points.reserve(values.size());
  for (uint64_t v : values) points.emplace_back(v, modulus_);
  return EvaluationDomain(field, std::move(points));
}

std::optional<size_t> EvaluationDomain::IndexOf(const FieldElement& x) const {
  if (x.modulus() != modulus_) return std::nullopt;
  auto it = index_.find(x.value());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

EvenOddParts SplitEvenOdd(const Polynomial& q) {
  std::vector<FieldElement> even, odd;
  const auto& c = q.coefficients();
  for (size_t i = 0; i < c.size(); ++i) (i % 2 == 0 ? even : odd).push_back(c[i]);
  return {Polynomial(q.field(), std::move(even)), Polynomial(q.field(), std::move(odd))};
}

Polynomial Fold(const Polynomial& q, const FieldElement& beta) {
  EvenOddParts parts = SplitEvenOdd(q);
  return parts.even + parts.odd.Scale(beta);
}

size_t FoldingRounds(int64_t bound) {
  if (bound <= 1) return 1;
  return static_cast<size_t>(std::bit_width(static_cast<uint64_t>(bound)));
}

std::vector<FriLayer> CommitPhase(const Polynomial& q, int64_t bound, EvaluationDomain domain0,
                                  const BetaSource& betas) {
  const size_t rounds = FoldingRounds(bound);
  // Layer j may not exceed floor(bound / 2^j). Without this only degrees up
  // to 2^rounds - 1 would be caught.
  auto check_layer = [&](const Polynomial& p, size_t j) {
    const int64_t limit = std::max<int64_t>(bound, 0) >> j;
    if (p.degree() > limit) {
      Throw(ErrorCode::kDegreeTestFailed, "layer " + std::to_string(j) + " has degree " +
                                              std::to_string(p.degree()) + " > " +
                                              std::to_string(limit));
    }
  };
  std::vector<FriLayer> layers;
  check_layer(q, 0);
  layers.push_back({q, std::nullopt, std::move(domain0)});
  for (size_t round = 0; round < rounds; ++round) {
    FriLayer& current = layers.back();
    const FieldElement beta = betas(current, round);
    current.beta = beta;
    Polynomial next = Fold(current.poly, beta);
    EvaluationDomain next_domain = current.eval_domain.Squared();
    if (round + 1 < rounds) check_layer(next, round + 1);
    layers.push_back({std::move(next), std::nullopt, std::move(next_domain)});
  }
  if (layers.back().poly.degree() > 0) {
    Throw(ErrorCode::kDegreeTestFailed,
          "final layer has degree " + std::to_string(layers.back().poly.degree()) +
              " after " + std::to_string(rounds) + " folds for bound " + std::to_string(bound));
  }
  return layers;
}

std::vector<FriLayer> CommitPhase(const Polynomial& q, int64_t bound, EvaluationDomain domain0,
                                  const std::vector<FieldElement>& betas) {
  return CommitPhase(q, bound, std::move(domain0), [&](const FriLayer&, size_t round) {
    if (round >= betas.size()) {
      Throw(ErrorCode::kTranscriptExhausted, "not enough betas for " +
                                                 std::to_string(FoldingRounds(bound)) + " rounds");
    }
    return betas[round];
  });
}

FriQueryAnswer AnswerQuery(const std::vector<FriLayer>& layers, const FieldElement& x) {
  FriQueryAnswer answer{x, {}, layers.back().poly.coefficient(0)};
  FieldElement y = x;
  for (size_t j = 0; j + 1 < layers.size(); ++j) {
    answer.layer_values.emplace_back(layers[j].poly.Evaluate(y), layers[j].poly.Evaluate(-y));
    y = y * y;
  }
  return answer;
}

FriQueryResult QueryCheck(const std::vector<FieldElement>& betas, const FriQueryAnswer& answer) {
  FriQueryResult result;
  const size_t rounds = answer.layer_values.size();
  if (betas.size() != rounds || rounds == 0) return result;
  const FieldElement two_inv = (answer.x.field().One() + answer.x.field().One()).Inverse();
  FieldElement y = answer.x;
  result.accepted = true;
  for (size_t j = 0; j < rounds; ++j) {
    const auto& [at_y, at_neg_y] = answer.layer_values[j];
    const FieldElement even = (at_y + at_neg_y) * two_inv;
    const FieldElement odd = (at_y - at_neg_y) * two_inv / y;
    const FieldElement computed = even + betas[j] * odd;
    const FieldElement queried =
        j + 1 < rounds ? answer.layer_values[j + 1].first : answer.final_value;
    result.computed.push_back(computed);
    result.queried.push_back(queried);
    if (computed != queried && result.accepted) {
      result.accepted = false;
      result.failed_layer = j + 1;
    }
    y = y * y;
  }
  return result;
}

FriQueryResult QueryCheck(const std::vector<FriLayer>& layers, const FriQueryAnswer& answer) {
  std::vector<FieldElement> betas;
  for (const auto& layer : layers) {
    if (layer.beta) betas.push_back(*layer.beta);
  }
  return QueryCheck(betas, answer);
}

}  // namespace projstark
