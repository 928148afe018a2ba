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

#include "projstark/errors.h"

namespace projstark {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMismatchedFields: return "mismatched-fields";
    case ErrorCode::kDivisionByZero: return "division-by-zero";
    case ErrorCode::kNoSubgroup: return "no-subgroup";
    case ErrorCode::kNotPrime: return "not-prime";
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kDuplicatePoint: return "duplicate-point";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kDomainMismatch: return "domain-mismatch";
    case ErrorCode::kInvalidTrace: return "invalid-trace";
    case ErrorCode::kLemmaInconsistent: return "lemma-inconsistent";
    case ErrorCode::kDegreeTestFailed: return "degree-test-failed";
    case ErrorCode::kTranscriptExhausted: return "transcript-exhausted";
    case ErrorCode::kExcludedChallenge: return "excluded-challenge";
    case ErrorCode::kEmptyTable: return "empty-table";
    case ErrorCode::kIndexOutOfRange: return "index-out-of-range";
    case ErrorCode::kOnlineFailure: return "online-failure";
    case ErrorCode::kInvalidConfig: return "invalid-config";
    case ErrorCode::kMalformedProof: return "malformed-proof";
  }
  return "unknown";
}

}  // namespace projstark
