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

#ifndef PROJSTARK_CONFIG_IO_H_
#define PROJSTARK_CONFIG_IO_H_

#include <optional>
#include <string>

#include "projstark/dynamics.h"
#include "projstark/protocol.h"
#include "projstark/transcript.h"

namespace projstark {

// Largest modulus accepted from a config; evaluation tables cover F_q^*.
inline constexpr uint64_t kMaxConfigModulus = uint64_t{1} << 20;

struct RunConfig {
  uint64_t modulus = 0;
  SystemSpec system;
  TranscriptMode mode = TranscriptMode::kFiatShamir;
  std::optional<InjectedChallenges> challenges;
  size_t num_queries = kDefaultQueries;
};

// Throws kInvalidConfig on syntax or type errors. Does not validate.
RunConfig ParseRunConfig(const std::string& text);
std::string SerializeRunConfig(const RunConfig& config);

// Checks everything later stages assume: q prime and at most
// kMaxConfigModulus, N + 1 dividing q - 1, sample points left over, and
// |row of A_hat| * max|bound| + max|bound| < q so that no honest value wraps.
// Throws kInvalidConfig, kNotPrime, kNoSubgroup or kDimensionMismatch.
void ValidateRunConfig(const RunConfig& config);

// Rows k = 0..N with z, and the slack columns on rows k < N.
std::string SerializeTrace(const ExecutionTrace& trace);
// Throws kInvalidConfig if the text does not describe a trace of the
// system's shape.
ExecutionTrace ParseTrace(const std::string& text, const SystemSpec& spec);

// Column names used by the tamper tool: z1.., alpha_up1.., alpha_lo1..,
// delta1.. (1-based coordinates).
void TamperTrace(ExecutionTrace& trace, size_t row, const std::string& column, int64_t value);

}  // namespace projstark

#endif  // PROJSTARK_CONFIG_IO_H_
