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

#ifndef PROJSTARK_AIR_H_
#define PROJSTARK_AIR_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "projstark/dynamics.h"
#include "projstark/field.h"
#include "projstark/polynomial.h"

namespace projstark {

// Constraint families per state coordinate, in combination order.
enum ConstraintFamily : size_t {
  kTransition = 0,   // z(k+1) from the slack form
  kDeltaDefinition,  // delta(k) from the slack form
  kAlphaUpBit,       // alpha_up(k) in {0,1}
  kAlphaLoBit,       // alpha_lo(k) in {0,1}
  kNumFamilies,
};

template <typename T>
using PerFamily = std::array<T, kNumFamilies>;

// The system with every constant reduced into F_q.
struct FieldSystem {
  PrimeField field;
  std::vector<std::vector<FieldElement>> a_hat;
  std::vector<FieldElement> z_upper;
  std::vector<FieldElement> z_lower;
  std::vector<FieldElement> z_init;
  size_t num_steps;

  size_t dimension() const { return z_init.size(); }
};

// Trace columns in F_q. z[i] has num_steps + 1 entries, the others num_steps.
struct FieldTrace {
  FieldSystem system;
  std::vector<std::vector<FieldElement>> z;
  std::vector<std::vector<FieldElement>> alpha_up;
  std::vector<std::vector<FieldElement>> alpha_lo;
  std::vector<std::vector<FieldElement>> delta;
};

struct LiftOptions {
  // Also require |A_hat z(k)| < q for every row, so that field identities
  // coincide with integer semantics.
  bool check_products = true;
};

// Throws kOverflow if any magnitude reaches q.
FieldSystem LiftSystem(const SystemSpec& spec, const PrimeField& field);
FieldTrace LiftTrace(const ExecutionTrace& trace, const PrimeField& field,
                     const LiftOptions& options = {});

struct TracePolynomials {
  std::vector<Polynomial> z;
  std::vector<Polynomial> alpha_up;
  std::vector<Polynomial> alpha_lo;
  std::vector<Polynomial> delta;
};

// Interpolates z over all of the domain and the slack columns over its first
// num_steps points. Throws kDomainMismatch unless domain order is N + 1.
TracePolynomials BuildTracePolys(const FieldTrace& trace, const CyclicDomain& domain);

// prod_{k < N} (x - g^k).
Polynomial TransitionVanishing(const CyclicDomain& domain);

std::vector<PerFamily<Polynomial>> BuildNumerators(const TracePolynomials& tp,
                                                   const FieldSystem& system,
                                                   const CyclicDomain& domain);

// Per-quotient degree bounds from the recorded trace-polynomial degrees.
// The transition bound uses the largest z degree over the support of row i of
// A_hat; for the example system this is D_{i,z}.
std::vector<PerFamily<int64_t>> CompositionDegreeBounds(const TracePolynomials& tp,
                                                        const FieldSystem& system);

struct CompositionSet {
  std::vector<PerFamily<Polynomial>> quotients;
  std::vector<PerFamily<int64_t>> bounds;
  // False if any remainder was nonzero and dropped (forced commits only).
  bool exact = true;
};

struct CompositionOptions {
  // Keep the quotient of an inexact division instead of failing. Only for
  // fault injection: the result no longer matches the trace.
  bool drop_remainders = false;
};

// Throws kInvalidTrace on a nonzero remainder unless drop_remainders is set.
CompositionSet BuildCompositions(const std::vector<PerFamily<Polynomial>>& numerators,
                                 const TracePolynomials& tp, const FieldSystem& system,
                                 const CyclicDomain& domain,
                                 const CompositionOptions& options = {});

// Combination weights indexed as gammas[l * n + i], i.e. gamma_{1,1},
// gamma_{2,1}, ..., gamma_{n,1}, gamma_{1,2}, ...
size_t GammaIndex(size_t coordinate, size_t family, size_t dimension);

struct CombinedPolynomial {
  Polynomial q;
  std::vector<FieldElement> gammas;
  int64_t degree_bound;
};

CombinedPolynomial Combine(const CompositionSet& cs, const std::vector<FieldElement>& gammas);

// Largest possible combined degree for any honest trace of N steps.
int64_t WorstCaseDegreeBound(size_t num_steps);

// f_z[i](g^0) == z_init[i] for all i.
bool BoundaryCheck(const TracePolynomials& tp, const FieldSystem& system);

// Values of the trace polynomials at one point x, plus z at g * x.
struct PointEvaluations {
  std::vector<FieldElement> z;
  std::vector<FieldElement> z_shifted;
  std::vector<FieldElement> alpha_up;
  std::vector<FieldElement> alpha_lo;
  std::vector<FieldElement> delta;
};

PointEvaluations EvaluateTraceAt(const TracePolynomials& tp, const FieldElement& x,
                                 const FieldElement& generator);

// Constraint numerators evaluated from point values alone.
std::vector<PerFamily<FieldElement>> EvaluateNumeratorsAt(const FieldSystem& system,
                                                          const PointEvaluations& values);

// (x^(N+1) - 1) / (x - g^N); equals prod_{k < N} (x - g^k). Requires x not in
// the domain.
FieldElement TransitionVanishingAt(const FieldElement& x, const CyclicDomain& domain);

// Q(x) recomputed by the verifier from point values.
FieldElement CombinedAt(const FieldSystem& system, const PointEvaluations& values,
                        const FieldElement& x, const CyclicDomain& domain,
                        const std::vector<FieldElement>& gammas);

}  // namespace projstark

#endif  // PROJSTARK_AIR_H_
