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

#ifndef PROJSTARK_PROOF_IO_H_
#define PROJSTARK_PROOF_IO_H_

#include <string>

#include "projstark/protocol.h"

namespace projstark {

inline constexpr int kProofFormatVersion = 1;

// JSON text; field elements as base-10 strings, digests as lowercase hex.
std::string SerializeProof(const Proof& proof);

// Throws kMalformedProof on any syntactic or structural problem.
Proof ParseProof(const std::string& text);

}  // namespace projstark

#endif  // PROJSTARK_PROOF_IO_H_
