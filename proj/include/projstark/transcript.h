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

#ifndef PROJSTARK_TRANSCRIPT_H_
#define PROJSTARK_TRANSCRIPT_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "projstark/field.h"
#include "projstark/merkle.h"

namespace projstark {

enum class ChallengeKind : uint8_t { kGamma = 1, kBeta = 2, kSamplePoint = 3 };

enum class TranscriptMode { kReplay, kFiatShamir };

const char* TranscriptModeName(TranscriptMode mode);

// Verifier randomness supplied ahead of time, consumed in order per kind.
struct InjectedChallenges {
  std::vector<uint64_t> gammas;
  std::vector<uint64_t> betas;
  std::vector<uint64_t> samples;
};

// Returns true for values a challenge must avoid (zero is always avoided).
using ExclusionPredicate = std::function<bool(const FieldElement&)>;

// Message log plus challenge source. In fiat-shamir mode each challenge is
// derived from SHA-256 of the log so far, so it is a pure function of what was
// absorbed. Replay mode logs the same messages but hands out injected values.
class Transcript {
 public:
  static Transcript Replay(InjectedChallenges injected);
  static Transcript FiatShamir();

  TranscriptMode mode() const { return mode_; }

  // Each message is framed as tag || le64(length) || payload.
  void Absorb(uint8_t tag, std::span<const uint8_t> payload);
  void AbsorbDigest(uint8_t tag, const Digest& digest);
  void AbsorbElement(uint8_t tag, const FieldElement& value);
  void AbsorbU64(uint8_t tag, uint64_t value);

  // Element of F_q^* outside the exclusions. Replay: throws
  // kTranscriptExhausted when no value of this kind is left and
  // kExcludedChallenge if the injected value is excluded or not in F_q^*.
  FieldElement Draw(ChallengeKind kind, const PrimeField& field,
                    const ExclusionPredicate& excluded = {});

  const std::vector<uint8_t>& log() const { return log_; }
  // Every challenge handed out so far, by kind.
  const InjectedChallenges& drawn() const { return drawn_; }

 private:
  explicit Transcript(TranscriptMode mode) : mode_(mode) {}

  TranscriptMode mode_;
  InjectedChallenges injected_;
  size_t next_gamma_ = 0;
  size_t next_beta_ = 0;
  size_t next_sample_ = 0;
  InjectedChallenges drawn_;
  std::vector<uint8_t> log_;
};

// Deterministic little-endian byte writer used for transcript payloads.
class ByteWriter {
 public:
  void U8(uint8_t v) { bytes_.push_back(v); }
  void U64(uint64_t v);
  void I64(int64_t v) { U64(static_cast<uint64_t>(v)); }
  void Bytes(std::span<const uint8_t> b);
  const std::vector<uint8_t>& bytes() const { return bytes_; }

 private:
  std::vector<uint8_t> bytes_;
};

}  // namespace projstark

#endif  // PROJSTARK_TRANSCRIPT_H_
