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

#ifndef PROJSTARK_DYNAMICS_H_
#define PROJSTARK_DYNAMICS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace projstark {

using IntVector = std::vector<int64_t>;
using IntMatrix = std::vector<IntVector>;

// Projected linear dynamics z(k+1) = clamp(A_hat z(k), z_lower, z_upper) over
// integers, run for num_steps steps from z_init.
struct SystemSpec {
  IntMatrix a_hat;
  IntVector z_upper;
  IntVector z_lower;
  IntVector z_init;
  size_t num_steps = 0;

  size_t dimension() const { return z_init.size(); }
  // Throws kDimensionMismatch or kInvalidConfig.
  void Validate() const;
};

// One step of the slack-variable form: the bits record whether the upper
// (alpha_up) and lower (alpha_lo) projections were inactive.
struct StepRecord {
  IntVector z_next;
  IntVector alpha_up;
  IntVector alpha_lo;
  IntVector delta;
};

// Execution trace: z has num_steps + 1 rows, the slack columns num_steps rows.
struct ExecutionTrace {
  SystemSpec spec;
  std::vector<IntVector> z_rows;
  std::vector<IntVector> alpha_up_rows;
  std::vector<IntVector> alpha_lo_rows;
  std::vector<IntVector> delta_rows;

  size_t num_steps() const { return alpha_up_rows.size(); }
  StepRecord step(size_t k) const;
  // Throws kDimensionMismatch if row counts or widths are inconsistent.
  void CheckShape() const;
};

// A_hat * z in exact arithmetic. Throws kDimensionMismatch, or kOverflow if a
// row sum leaves the int64 range.
IntVector ApplyTransition(const SystemSpec& spec, const IntVector& z);

IntVector StepProject(const SystemSpec& spec, const IntVector& z);
StepRecord StepSlack(const SystemSpec& spec, const IntVector& z);

enum class OnlineRejectReason { kNone, kDeltaTooSmall, kOutOfBounds, kShape };

struct OnlineVerdict {
  OnlineRejectReason reason = OnlineRejectReason::kNone;
  size_t coordinate = 0;
  bool accepted() const { return reason == OnlineRejectReason::kNone; }
  std::string ToString() const;
};

// The cheap per-step checks: delta_i >= z_upper_i - z_lower_i and
// z_lower <= z_next <= z_upper.
OnlineVerdict OnlineCheck(const SystemSpec& spec, const StepRecord& record);

ExecutionTrace Simulate(const SystemSpec& spec);

struct SlackAssignment {
  int64_t alpha_up;
  int64_t alpha_lo;
  int64_t delta;
  int64_t z_next;
  friend bool operator==(const SlackAssignment&, const SlackAssignment&) = default;
};

// Every (alpha_up, alpha_lo) in {0,1}^2 whose z_next and delta satisfy the
// online checks for one coordinate.
std::vector<SlackAssignment> EnumerateSlackAssignments(int64_t ahat_z, int64_t upper,
                                                       int64_t lower);

// Brute-force solution of the slack bits for one coordinate. When several
// assignments satisfy the checks (only at exact bound ties) they agree on
// z_next and delta and the inclusive one is returned. Throws
// kLemmaInconsistent if none exists or the candidates disagree.
SlackAssignment SolveSlackCoordinate(int64_t ahat_z, int64_t upper, int64_t lower);
std::vector<SlackAssignment> SolveSlack(const SystemSpec& spec, const IntVector& ahat_z);

}  // namespace projstark

#endif  // PROJSTARK_DYNAMICS_H_
