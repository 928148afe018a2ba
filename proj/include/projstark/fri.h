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

#ifndef PROJSTARK_FRI_H_
#define PROJSTARK_FRI_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "projstark/field.h"
#include "projstark/polynomial.h"

namespace projstark {

// Ordered point set on which a layer is committed, with O(1) lookup.
class EvaluationDomain {
 public:
  EvaluationDomain(const PrimeField& field, std::vector<FieldElement> points);

  // F_q^* minus the trace domain and its negation, ascending.
  static EvaluationDomain LayerZero(const CyclicDomain& trace_domain);
  // {x^2 : x in this} closed under negation, ascending. Closure is needed when
  // -1 is not a square, so that -y is always queryable.
  EvaluationDomain Squared() const;

  const std::vector<FieldElement>& points() const { return points_; }
  size_t size() const { return points_.size(); }
  bool Contains(const FieldElement& x) const { return index_.count(x.value()) > 0; }
  std::optional<size_t> IndexOf(const FieldElement& x) const;

 private:
  uint64_t modulus_;
  std::vector<FieldElement> points_;
  std::unordered_map<uint64_t, size_t> index_;
};

struct EvenOddParts {
  Polynomial even;
  Polynomial odd;
};

// Q(x) = even(x^2) + x * odd(x^2).
EvenOddParts SplitEvenOdd(const Polynomial& q);
// even + beta * odd.
Polynomial Fold(const Polynomial& q, const FieldElement& beta);

// floor(log2(bound)) + 1 for bound >= 1; one round for bound 0.
size_t FoldingRounds(int64_t bound);

struct FriLayer {
  Polynomial poly;
  // Challenge folding this layer into the next; absent on the final layer.
  std::optional<FieldElement> beta;
  EvaluationDomain eval_domain;
};

// Called once per round with the layer about to be folded; returns its beta.
// The protocol commits the layer and draws from its transcript here.
using BetaSource = std::function<FieldElement(const FriLayer& layer, size_t round)>;

// Folds FoldingRounds(bound) times. The returned list holds Q_0 = q through
// Q_rounds. Throws kDegreeTestFailed if a layer Q_j has degree above
// floor(bound / 2^j), in particular if the final layer is not constant.
std::vector<FriLayer> CommitPhase(const Polynomial& q, int64_t bound, EvaluationDomain domain0,
                                  const BetaSource& betas);
std::vector<FriLayer> CommitPhase(const Polynomial& q, int64_t bound, EvaluationDomain domain0,
                                  const std::vector<FieldElement>& betas);

// Values opened for one sample point x: for each folded layer j, the pair
// (Q_j(y), Q_j(-y)) with y = x^(2^j); then the final constant.
struct FriQueryAnswer {
  FieldElement x;
  std::vector<std::pair<FieldElement, FieldElement>> layer_values;
  FieldElement final_value;
};

FriQueryAnswer AnswerQuery(const std::vector<FriLayer>& layers, const FieldElement& x);

struct FriQueryResult {
  bool accepted = false;
  // First layer whose computed value disagreed with the queried one.
  size_t failed_layer = 0;
  // computed[j] and queried[j] are Q_{j+1}(x^(2^(j+1))).
  std::vector<FieldElement> computed;
  std::vector<FieldElement> queried;
};

// Recomputes each next-layer value from the pair (Q_j(y), Q_j(-y)) and beta_j
// and compares it with the queried value, down to the final constant.
FriQueryResult QueryCheck(const std::vector<FieldElement>& betas, const FriQueryAnswer& answer);
FriQueryResult QueryCheck(const std::vector<FriLayer>& layers, const FriQueryAnswer& answer);

}  // namespace projstark

#endif  // PROJSTARK_FRI_H_
