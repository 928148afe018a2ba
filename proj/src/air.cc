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

#include "projstark/air.h"

#include <algorithm>
#include <cstdlib>
#include <span>

#include "projstark/errors.h"

namespace projstark {

namespace {

FieldElement LiftValue(int64_t v, const PrimeField& field, const char* what) {
  const uint64_t q = field.modulus();
  const uint64_t magnitude =
      v < 0 ? static_cast<uint64_t>(-(v + 1)) + 1 : static_cast<uint64_t>(v);
  if (magnitude >= q) {
    Throw(ErrorCode::kOverflow, std::string(what) + " value " + std::to_string(v) +
                                    " does not fit below q = " + std::to_string(q));
  }
  return field.FromInt(v);
}

std::vector<FieldElement> LiftVector(const IntVector& v, const PrimeField& field,
                                     const char* what) {
  std::vector<FieldElement> out;
  out.reserve(v.size());
  for (int64_t x : v) out.push_back(LiftValue(x, field, what));
  return out;
}

// Transposes rows into per-coordinate columns.
std::vector<std::vector<FieldElement>> LiftColumns(const std::vector<IntVector>& rows, size_t n,
                                                   const PrimeField& field, const char* what) {
  std::vector<std::vector<FieldElement>> cols(n);
  for (const auto& row : rows) {
    for (size_t i = 0; i < n; ++i) cols[i].push_back(LiftValue(row[i], field, what));
  }
  return cols;
}

int64_t Clamped(int64_t degree) { return std::max<int64_t>(degree, 0); }

}  // namespace

FieldSystem LiftSystem(const SystemSpec& spec, const PrimeField& field) {
  spec.Validate();
  FieldSystem sys{field, {}, LiftVector(spec.z_upper, field, "z_upper"),
                  LiftVector(spec.z_lower, field, "z_lower"),
                  LiftVector(spec.z_init, field, "z_init"), spec.num_steps};
  for (const auto& row : spec.a_hat) sys.a_hat.push_back(LiftVector(row, field, "A_hat"));
  return sys;
}

FieldTrace LiftTrace(const ExecutionTrace& trace, const PrimeField& field,
                     const LiftOptions& options) {
  trace.CheckShape();
  const size_t n = trace.spec.dimension();
  FieldTrace out{LiftSystem(trace.spec, field),
                 LiftColumns(trace.z_rows, n, field, "z"),
                 LiftColumns(trace.alpha_up_rows, n, field, "alpha_up"),
                 LiftColumns(trace.alpha_lo_rows, n, field, "alpha_lo"),
                 LiftColumns(trace.delta_rows, n, field, "delta")};
  if (options.check_products) {
    for (size_t k = 0; k + 1 < trace.z_rows.size(); ++k) {
      for (int64_t v : ApplyTransition(trace.spec, trace.z_rows[k])) LiftValue(v, field, "A_hat z");
    }
  }
  return out;
}

TracePolynomials BuildTracePolys(const FieldTrace& trace, const CyclicDomain& domain) {
  const size_t steps = trace.system.num_steps;
  if (domain.order() != steps + 1) {
    Throw(ErrorCode::kDomainMismatch, "domain order " + std::to_string(domain.order()) +
                                          " != N + 1 = " + std::to_string(steps + 1));
  }
  const auto& all = domain.elements();
  std::span<const FieldElement> steps_points(all.data(), steps);
  TracePolynomials tp;
  for (size_t i = 0; i < trace.system.dimension(); ++i) {
    tp.z.push_back(Interpolate(all, trace.z[i]));
    tp.alpha_up.push_back(Interpolate(steps_points, trace.alpha_up[i]));
    tp.alpha_lo.push_back(Interpolate(steps_points, trace.alpha_lo[i]));
    tp.delta.push_back(Interpolate(steps_points, trace.delta[i]));
  }
  return tp;
}

Polynomial TransitionVanishing(const CyclicDomain& domain) {
  const auto& all = domain.elements();
  return Vanishing(std::span<const FieldElement>(all.data(), domain.order() - 1));
}

std::vector<PerFamily<Polynomial>> BuildNumerators(const TracePolynomials& tp,
                                                   const FieldSystem& system,
                                                   const CyclicDomain& domain) {
  const size_t n = system.dimension();
  const PrimeField& field = system.field;
  const Polynomial one = Polynomial::Constant(field.One());
  std::vector<PerFamily<Polynomial>> out;
  for (size_t i = 0; i < n; ++i) {
    Polynomial az(field);
    for (size_t j = 0; j < n; ++j) az = az + tp.z[j].Scale(system.a_hat[i][j]);
    const Polynomial& up = tp.alpha_up[i];
    const Polynomial& lo = tp.alpha_lo[i];
    const Polynomial upper = Polynomial::Constant(system.z_upper[i]);
    const Polynomial lower = Polynomial::Constant(system.z_lower[i]);

    Polynomial transition = tp.z[i].ComposeScaled(domain.generator()) - lo * up * az -
                            (one - up) * upper - (one - lo) * lower;
    Polynomial delta = tp.delta[i] - up * (upper - az) - lo * (az - lower);
    out.push_back({std::move(transition), std::move(delta), up * (one - up), lo * (one - lo)});
  }
  return out;
}

std::vector<PerFamily<int64_t>> CompositionDegreeBounds(const TracePolynomials& tp,
                                                        const FieldSystem& system) {
  const size_t n = system.dimension();
  const int64_t steps = static_cast<int64_t>(system.num_steps);
  std::vector<PerFamily<int64_t>> out;
  for (size_t i = 0; i < n; ++i) {
    int64_t d_az = 0;
    for (size_t j = 0; j < n; ++j) {
      if (!system.a_hat[i][j].IsZero()) d_az = std::max(d_az, Clamped(tp.z[j].degree()));
    }
    const int64_t d_up = Clamped(tp.alpha_up[i].degree());
    const int64_t d_lo = Clamped(tp.alpha_lo[i].degree());
    out.push_back({
        std::max<int64_t>(d_az + d_up + d_lo - steps, 0),
        std::max<int64_t>(d_az + std::max(d_up, d_lo) - steps, 0),
        std::max<int64_t>(2 * d_up - steps, 0),
        std::max<int64_t>(2 * d_lo - steps, 0),
    });
  }
  return out;
}

CompositionSet BuildCompositions(const std::vector<PerFamily<Polynomial>>& numerators,
                                 const TracePolynomials& tp, const FieldSystem& system,
                                 const CyclicDomain& domain, const CompositionOptions& options) {
  const Polynomial den = TransitionVanishing(domain);
  CompositionSet cs;
  cs.bounds = CompositionDegreeBounds(tp, system);
  for (size_t i = 0; i < numerators.size(); ++i) {
    PerFamily<Polynomial> row{Polynomial(system.field), Polynomial(system.field),
                              Polynomial(system.field), Polynomial(system.field)};
    for (size_t l = 0; l < kNumFamilies; ++l) {
      DivisionResult div = DivideExact(numerators[i][l], den);
      if (!div.remainder_zero()) {
        if (!options.drop_remainders) {
          Throw(ErrorCode::kInvalidTrace, "constraint " + std::to_string(l + 1) +
                                              " of coordinate " + std::to_string(i + 1) +
                                              " does not vanish on the trace domain");
        }
        cs.exact = false;
      }
      row[l] = std::move(div.quotient);
    }
    cs.quotients.push_back(std::move(row));
  }
  return cs;
}

size_t GammaIndex(size_t coordinate, size_t family, size_t dimension) {
  return family * dimension + coordinate;
}

CombinedPolynomial Combine(const CompositionSet& cs, const std::vector<FieldElement>& gammas) {
  const size_t n = cs.quotients.size();
  if (gammas.size() != n * kNumFamilies) {
    Throw(ErrorCode::kDimensionMismatch, "need one gamma per composition polynomial");
  }
  const PrimeField field = gammas.front().field();
  Polynomial q(field);
  int64_t bound = 0;
  for (size_t i = 0; i < n; ++i) {
    for (size_t l = 0; l < kNumFamilies; ++l) {
      q = q + cs.quotients[i][l].Scale(gammas[GammaIndex(i, l, n)]);
      bound = std::max(bound, cs.bounds[i][l]);
    }
  }
  return {std::move(q), gammas, bound};
}

int64_t WorstCaseDegreeBound(size_t num_steps) {
  return std::max<int64_t>(2 * static_cast<int64_t>(num_steps) - 2, 0);
}

bool BoundaryCheck(const TracePolynomials& tp, const FieldSystem& system) {
  const FieldElement one = system.field.One();
  for (size_t i = 0; i < system.dimension(); ++i) {
    if (tp.z[i].Evaluate(one) != system.z_init[i]) return false;
  }
  return true;
}

PointEvaluations EvaluateTraceAt(const TracePolynomials& tp, const FieldElement& x,
                                 const FieldElement& generator) {
  PointEvaluations v;
  const FieldElement shifted = x * generator;
  for (size_t i = 0; i < tp.z.size(); ++i) {
    v.z.push_back(tp.z[i].Evaluate(x));
    v.z_shifted.push_back(tp.z[i].Evaluate(shifted));
    v.alpha_up.push_back(tp.alpha_up[i].Evaluate(x));
    v.alpha_lo.push_back(tp.alpha_lo[i].Evaluate(x));
    v.delta.push_back(tp.delta[i].Evaluate(x));
  }
  return v;
}

std::vector<PerFamily<FieldElement>> EvaluateNumeratorsAt(const FieldSystem& system,
                                                          const PointEvaluations& values) {
  const size_t n = system.dimension();
  const FieldElement one = system.field.One();
  std::vector<PerFamily<FieldElement>> out;
  for (size_t i = 0; i < n; ++i) {
    FieldElement az = system.field.Zero();
    for (size_t j = 0; j < n; ++j) az += system.a_hat[i][j] * values.z[j];
    const FieldElement& up = values.alpha_up[i];
    const FieldElement& lo = values.alpha_lo[i];
    const FieldElement& upper = system.z_upper[i];
    const FieldElement& lower = system.z_lower[i];
    out.push_back({
        values.z_shifted[i] - lo * up * az - (one - up) * upper - (one - lo) * lower,
        values.delta[i] - up * (upper - az) - lo * (az - lower),
        up * (one - up),
        lo * (one - lo),
    });
  }
  return out;
}

FieldElement TransitionVanishingAt(const FieldElement& x, const CyclicDomain& domain) {
  const FieldElement last = domain[domain.order() - 1];
  return (x.Pow(domain.order()) - x.field().One()) / (x - last);
}

FieldElement CombinedAt(const FieldSystem& system, const PointEvaluations& values,
                        const FieldElement& x, const CyclicDomain& domain,
                        const std::vector<FieldElement>& gammas) {
  const size_t n = system.dimension();
  const FieldElement den_inv = TransitionVanishingAt(x, domain).Inverse();
  const auto numerators = EvaluateNumeratorsAt(system, values);
  FieldElement acc = system.field.Zero();
  for (size_t i = 0; i < n; ++i) {
    for (size_t l = 0; l < kNumFamilies; ++l) {
      acc += gammas.at(GammaIndex(i, l, n)) * numerators[i][l] * den_inv;
    }
  }
  return acc;
}

}  // namespace projstark
