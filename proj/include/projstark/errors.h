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

#ifndef PROJSTARK_ERRORS_H_
#define PROJSTARK_ERRORS_H_

#include <stdexcept>
#include <string>

namespace projstark {

enum class ErrorCode {
  kMismatchedFields,
  kDivisionByZero,
  kNoSubgroup,
  kNotPrime,
  kDimensionMismatch,
  kDuplicatePoint,
  kOverflow,
  kDomainMismatch,
  kInvalidTrace,
  kLemmaInconsistent,
  kDegreeTestFailed,
  kTranscriptExhausted,
  kExcludedChallenge,
  kEmptyTable,
  kIndexOutOfRange,
  kOnlineFailure,
  kInvalidConfig,
  kMalformedProof,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type. Verifier
// rejections are not errors; they are reported through VerificationReport.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Throw(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace projstark

#endif  // PROJSTARK_ERRORS_H_
