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

#include "projstark/dynamics.h"

#include "projstark/errors.h"

namespace projstark {

void SystemSpec::Validate() const {
  const size_t n = dimension();
  if (n == 0) Throw(ErrorCode::kInvalidConfig, "state dimension must be positive");
  if (a_hat.size() != n || z_upper.size() != n || z_lower.size() != n) {
    Throw(ErrorCode::kDimensionMismatch, "A_hat, bounds and z_init must share dimension " +
                                             std::to_string(n));
  }
  for (const auto& row : a_hat) {
    if (row.size() != n) Throw(ErrorCode::kDimensionMismatch, "A_hat must be square");
  }
  if (num_steps < 1) Throw(ErrorCode::kInvalidConfig, "N must be at least 1");
  for (size_t i = 0; i < n; ++i) {
    if (!(z_lower[i] < z_upper[i])) {
      Throw(ErrorCode::kInvalidConfig, "z_lower must be strictly below z_upper at index " +
                                           std::to_string(i + 1));
    }
    if (z_init[i] < z_lower[i] || z_init[i] > z_upper[i]) {
      Throw(ErrorCode::kInvalidConfig,
            "z_init is outside the bounds at index " + std::to_string(i + 1));
    }
  }
}

StepRecord ExecutionTrace::step(size_t k) const {
  return {z_rows.at(k + 1), alpha_up_rows.at(k), alpha_lo_rows.at(k), delta_rows.at(k)};
}

void ExecutionTrace::CheckShape() const {
  const size_t n = spec.dimension();
  const size_t steps = spec.num_steps;
  if (z_rows.size() != steps + 1 || alpha_up_rows.size() != steps ||
      alpha_lo_rows.size() != steps || delta_rows.size() != steps) {
    Throw(ErrorCode::kDimensionMismatch, "trace row counts do not match N = " +
                                             std::to_string(steps));
  }
  auto check_width = [n](const std::vector<IntVector>& rows) {
    for (const auto& r : rows) {
      if (r.size() != n) Throw(ErrorCode::kDimensionMismatch, "trace row width mismatch");
    }
  };
  check_width(z_rows);
  check_width(alpha_up_rows);
  check_width(alpha_lo_rows);
  check_width(delta_rows);
}

IntVector ApplyTransition(const SystemSpec& spec, const IntVector& z) {
  const size_t n = spec.dimension();
  if (z.size() != n) Throw(ErrorCode::kDimensionMismatch, "state has wrong dimension");
  IntVector out(n, 0);
  for (size_t i = 0; i < n; ++i) {
    __int128 acc = 0;
    for (size_t j = 0; j < n; ++j) acc += static_cast<__int128>(spec.a_hat[i][j]) * z[j];
    if (acc > INT64_MAX || acc < INT64_MIN) Throw(ErrorCode::kOverflow, "A_hat z overflows int64");
    out[i] = static_cast<int64_t>(acc);
  }
  return out;
}

IntVector StepProject(const SystemSpec& spec, const IntVector& z) {
  IntVector next = ApplyTransition(spec, z);
  for (size_t i = 0; i < next.size(); ++i) {
    if (next[i] > spec.z_upper[i]) next[i] = spec.z_upper[i];
    if (next[i] < spec.z_lower[i]) next[i] = spec.z_lower[i];
  }
  return next;
}

StepRecord StepSlack(const SystemSpec& spec, const IntVector& z) {
  const IntVector az = ApplyTransition(spec, z);
  const size_t n = az.size();
  StepRecord rec{IntVector(n), IntVector(n), IntVector(n), IntVector(n)};
  for (size_t i = 0; i < n; ++i) {
    const int64_t up = az[i] <= spec.z_upper[i] ? 1 : 0;
    const int64_t lo = az[i] >= spec.z_lower[i] ? 1 : 0;
    rec.alpha_up[i] = up;
    rec.alpha_lo[i] = lo;
    rec.z_next[i] = up * lo * az[i] + (1 - up) * spec.z_upper[i] + (1 - lo) * spec.z_lower[i];
    rec.delta[i] = up * (spec.z_upper[i] - az[i]) + lo * (az[i] - spec.z_lower[i]);
  }
  return rec;
}

std::string OnlineVerdict::ToString() const {
  switch (reason) {
    case OnlineRejectReason::kNone: return "accept";
    case OnlineRejectReason::kDeltaTooSmall:
      return "reject(delta-too-small at z" + std::to_string(coordinate + 1) + ")";
    case OnlineRejectReason::kOutOfBounds:
      return "reject(out-of-bounds at z" + std::to_string(coordinate + 1) + ")";
    case OnlineRejectReason::kShape: return "reject(malformed step)";
  }
  return "reject";
}

OnlineVerdict OnlineCheck(const SystemSpec& spec, const StepRecord& record) {
  const size_t n = spec.dimension();
  if (record.delta.size() != n || record.z_next.size() != n) {
    return {OnlineRejectReason::kShape, 0};
  }
  for (size_t i = 0; i < n; ++i) {
    if (record.delta[i] < spec.z_upper[i] - spec.z_lower[i]) {
      return {OnlineRejectReason::kDeltaTooSmall, i};
    }
  }
  for (size_t i = 0; i < n; ++i) {
    if (record.z_next[i] < spec.z_lower[i] || record.z_next[i] > spec.z_upper[i]) {
      return {OnlineRejectReason::kOutOfBounds, i};
    }
  }
  return {};
}

ExecutionTrace Simulate(const SystemSpec& spec) {
  spec.Validate();
  ExecutionTrace trace;
  trace.spec = spec;
  trace.z_rows.push_back(spec.z_init);
  for (size_t k = 0; k < spec.num_steps; ++k) {
    StepRecord rec = StepSlack(spec, trace.z_rows.back());
    trace.z_rows.push_back(std::move(rec.z_next));
    trace.alpha_up_rows.push_back(std::move(rec.alpha_up));
    trace.alpha_lo_rows.push_back(std::move(rec.alpha_lo));
    trace.delta_rows.push_back(std::move(rec.delta));
  }
  return trace;
}

std::vector<SlackAssignment> EnumerateSlackAssignments(int64_t ahat_z, int64_t upper,
                                                       int64_t lower) {
  std::vector<SlackAssignment> found;
  for (int64_t up = 1; up >= 0; --up) {
    for (int64_t lo = 1; lo >= 0; --lo) {
      const int64_t z_next = up * lo * ahat_z + (1 - up) * upper + (1 - lo) * lower;
      const int64_t delta = up * (upper - ahat_z) + lo * (ahat_z - lower);
      if (delta >= upper - lower && z_next >= lower && z_next <= upper) {
        found.push_back({up, lo, delta, z_next});
      }
    }
  }
  return found;
}

SlackAssignment SolveSlackCoordinate(int64_t ahat_z, int64_t upper, int64_t lower) {
  const std::vector<SlackAssignment> found = EnumerateSlackAssignments(ahat_z, upper, lower);
  if (found.empty()) {
    Throw(ErrorCode::kLemmaInconsistent,
          "no slack assignment satisfies the checks for A_hat z = " + std::to_string(ahat_z));
  }
  for (const auto& a : found) {
    if (a.z_next != found.front().z_next || a.delta != found.front().delta) {
      Throw(ErrorCode::kLemmaInconsistent, "slack assignments disagree for A_hat z = " +
                                               std::to_string(ahat_z));
    }
  }
  // Enumeration visits (1,1) first, then (1,0), (0,1): the first hit is the
  // inclusive-comparison choice.
  return found.front();
}

std::vector<SlackAssignment> SolveSlack(const SystemSpec& spec, const IntVector& ahat_z) {
  if (ahat_z.size() != spec.dimension()) {
    Throw(ErrorCode::kDimensionMismatch, "A_hat z has wrong dimension");
  }
  std::vector<SlackAssignment> out;
  for (size_t i = 0; i < ahat_z.size(); ++i) {
    out.push_back(SolveSlackCoordinate(ahat_z[i], spec.z_upper[i], spec.z_lower[i]));
  }
  return out;
}

}  // namespace projstark
