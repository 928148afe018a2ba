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

#include "projstark/transcript.h"

#include "projstark/errors.h"

namespace projstark {

namespace {

constexpr uint8_t kChallengeTag = 0xc0;
constexpr uint64_t kMaxRejections = 1 << 16;

const char* KindName(ChallengeKind kind) {
  switch (kind) {
    case ChallengeKind::kGamma: return "gamma";
    case ChallengeKind::kBeta: return "beta";
    case ChallengeKind::kSamplePoint: return "sample point";
  }
  return "challenge";
}

// Big-endian digest value mod m.
uint64_t DigestMod(const Digest& d, uint64_t m) {
  unsigned __int128 r = 0;
  for (uint8_t b : d) r = ((r << 8) | b) % m;
  return static_cast<uint64_t>(r);
}

}  // namespace

const char* TranscriptModeName(TranscriptMode mode) {
  return mode == TranscriptMode::kReplay ? "replay" : "fiat-shamir";
}

void ByteWriter::U64(uint64_t v) {
  for (int i = 0; i < 8; ++i) bytes_.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void ByteWriter::Bytes(std::span<const uint8_t> b) {
  U64(b.size());
  bytes_.insert(bytes_.end(), b.begin(), b.end());
}

Transcript Transcript::Replay(InjectedChallenges injected) {
  Transcript t(TranscriptMode::kReplay);
  t.injected_ = std::move(injected);
  return t;
}

Transcript Transcript::FiatShamir() { return Transcript(TranscriptMode::kFiatShamir); }

void Transcript::Absorb(uint8_t tag, std::span<const uint8_t> payload) {
  ByteWriter w;
  w.U8(tag);
  w.Bytes(payload);
  log_.insert(log_.end(), w.bytes().begin(), w.bytes().end());
}

void Transcript::AbsorbDigest(uint8_t tag, const Digest& digest) { Absorb(tag, digest); }

void Transcript::AbsorbElement(uint8_t tag, const FieldElement& value) { AbsorbU64(tag, value.value()); }

void Transcript::AbsorbU64(uint8_t tag, uint64_t value) {
  ByteWriter w;
  w.U64(value);
  Absorb(tag, w.bytes());
}

FieldElement Transcript::Draw(ChallengeKind kind, const PrimeField& field,
                              const ExclusionPredicate& excluded) {
  auto is_excluded = [&](const FieldElement& x) {
    return x.IsZero() || (excluded && excluded(x));
  };
  std::vector<uint64_t>* sink = kind == ChallengeKind::kGamma  ? &drawn_.gammas
                                : kind == ChallengeKind::kBeta ? &drawn_.betas
                                                               : &drawn_.samples;
  FieldElement result = field.Zero();
  if (mode_ == TranscriptMode::kReplay) {
    std::vector<uint64_t>* source = kind == ChallengeKind::kGamma  ? &injected_.gammas
                                    : kind == ChallengeKind::kBeta ? &injected_.betas
                                                                   : &injected_.samples;
    size_t* next = kind == ChallengeKind::kGamma  ? &next_gamma_
                   : kind == ChallengeKind::kBeta ? &next_beta_
                                                  : &next_sample_;
    if (*next >= source->size()) {
      Throw(ErrorCode::kTranscriptExhausted,
            std::string("no injected ") + KindName(kind) + " left (used " +
                std::to_string(*next) + ")");
    }
    const uint64_t v = (*source)[(*next)++];
    if (v == 0 || v >= field.modulus()) {
      Throw(ErrorCode::kExcludedChallenge, std::string("injected ") + KindName(kind) + " " +
                                               std::to_string(v) + " is not in F_q^*");
    }
    result = field.FromCanonical(v);
    if (is_excluded(result)) {
      Throw(ErrorCode::kExcludedChallenge, std::string("injected ") + KindName(kind) + " " +
                                               std::to_string(v) + " is in the excluded set");
    }
  } else {
    for (uint64_t counter = 0;; ++counter) {
      if (counter == kMaxRejections) {
        Throw(ErrorCode::kExcludedChallenge, "challenge rejection sampling did not terminate");
      }
      std::vector<uint8_t> buf = log_;
      ByteWriter w;
      w.U8(static_cast<uint8_t>(kind));
      w.U64(counter);
      buf.insert(buf.end(), w.bytes().begin(), w.bytes().end());
      const uint64_t v = DigestMod(Sha256(buf), field.modulus() - 1) + 1;
      result = field.FromCanonical(v);
      if (!is_excluded(result)) break;
    }
  }
  ByteWriter w;
  w.U8(static_cast<uint8_t>(kind));
  w.U64(result.value());
  Absorb(kChallengeTag, w.bytes());
  sink->push_back(result.value());
  return result;
}

}  // namespace projstark
