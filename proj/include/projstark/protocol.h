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

#ifndef PROJSTARK_PROTOCOL_H_
#define PROJSTARK_PROTOCOL_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "projstark/air.h"
#include "projstark/dynamics.h"
#include "projstark/field.h"
#include "projstark/fri.h"
#include "projstark/merkle.h"
#include "projstark/polynomial.h"
#include "projstark/transcript.h"

namespace projstark {

// Structural limits on parsed proofs.
inline constexpr size_t kMaxFriLayers = 64;
inline constexpr size_t kMaxQueries = 1024;
inline constexpr size_t kDefaultQueries = 8;

struct ProofPublics {
  uint64_t modulus = 0;
  uint64_t num_steps = 0;
  uint64_t dimension = 0;
  uint64_t generator = 0;
  Digest system_hash{};
  TranscriptMode mode = TranscriptMode::kFiatShamir;
  int64_t claimed_degree_bound = 0;
  std::string salt;
};

struct Opening {
  uint64_t index = 0;
  uint64_t value = 0;
  std::vector<Digest> path;
};

struct TraceCommitments {
  std::vector<Digest> z;
  std::vector<Digest> alpha_up;
  std::vector<Digest> alpha_lo;
  std::vector<Digest> delta;
  // Commitments to (f_z[i](x) - z_init[i]) / (x - 1).
  std::vector<Digest> boundary;
  Digest composition{};
};

// Folded layer Q_j (j = 0 is the combined polynomial, committed as
// TraceCommitments::composition).
struct FriLayerRecord {
  uint64_t beta = 0;
  std::optional<Digest> root;  // present for j >= 1
  // Present when the prover publishes layers in the clear.
  std::optional<std::vector<uint64_t>> coefficients;
};

struct QueryOpenings {
  uint64_t x = 0;
  std::vector<Opening> z;
  std::vector<Opening> z_shifted;  // f_z at g * x
  std::vector<Opening> alpha_up;
  std::vector<Opening> alpha_lo;
  std::vector<Opening> delta;
  std::vector<Opening> boundary;
  Opening composition;      // Q(x)
  Opening composition_neg;  // Q(-x)
  // For folded layers j = 1 .. rounds-1: Q_j(y), Q_j(-y) with y = x^(2^j).
  std::vector<std::pair<Opening, Opening>> fri;
};

struct Proof {
  ProofPublics publics;
  TraceCommitments commitments;
  std::vector<FriLayerRecord> fri_layers;
  uint64_t fri_final = 0;
  std::vector<QueryOpenings> queries;
  // Replay mode only: every challenge the prover consumed.
  std::optional<InjectedChallenges> challenges;
};

// SHA-256 over the system matrix, bounds, N and q (z_init is checked by the
// boundary constraint instead).
Digest SystemHash(const SystemSpec& spec, uint64_t modulus);

struct FaultInjection {
  // Commit the interpolants of an inconsistent trace, keeping quotients with
  // their remainders dropped, instead of refusing.
  bool force_commit = false;
  // Commit this polynomial in place of the combined polynomial.
  std::optional<Polynomial> replace_composition;
};

struct ProveOptions {
  size_t num_queries = kDefaultQueries;
  // Publish folded layers' coefficients; defaults to on in replay mode.
  std::optional<bool> clear_layers;
  std::string salt;
  FaultInjection faults;
};

// Intermediate objects of a proof run, exposed for inspection and replay.
struct ProverArtifacts {
  TracePolynomials trace_polys;
  CompositionSet compositions;
  CombinedPolynomial combined;
  std::vector<FriLayer> fri_layers;
  std::vector<FriQueryAnswer> answers;
};

// Throws kInvalidTrace (online check failure, nonzero remainder), kOverflow,
// kTranscriptExhausted, kDegreeTestFailed.
Proof Prove(const ExecutionTrace& trace, const PrimeField& field, Transcript& transcript,
            const ProveOptions& options = {},
            std::optional<ProverArtifacts>* artifacts = nullptr);

enum class VerificationStage { kNone, kOnline, kCommitment, kBoundary, kConsistency, kFriCommit, kFriQuery };

const char* StageName(VerificationStage stage);

struct QueryTrace {
  uint64_t x = 0;
  std::vector<uint64_t> computed;
  std::vector<uint64_t> queried;
};

struct VerificationReport {
  bool accepted = false;
  VerificationStage stage = VerificationStage::kNone;
  std::string detail;
  // Per-query FRI chains, filled once the query phase runs.
  std::vector<QueryTrace> query_traces;

  std::string ToString() const;
};

struct VerifyOptions {
  // Number of sample points the verifier insists on; defaults to the number
  // present in the proof.
  std::optional<size_t> num_queries;
};

// Checks a proof against the verifier's own statement. Rejections are
// reported; a structurally malformed proof throws kMalformedProof.
VerificationReport Verify(const SystemSpec& spec, const PrimeField& field, const Proof& proof,
                          Transcript& transcript, const VerifyOptions& options = {});

// Online stage: asks the step source for each step, re-requesting rejected
// steps up to max_retries times.
using StepSource = std::function<StepRecord(size_t k, const IntVector& z, size_t attempt)>;

struct OnlineLogEntry {
  size_t step;
  size_t attempt;
  OnlineVerdict verdict;
};

struct OnlineOptions {
  size_t max_retries = 3;
};

StepSource HonestStepSource(const SystemSpec& spec);

// Throws kOnlineFailure when a step is still rejected after max_retries redos.
ExecutionTrace RunOnlineStage(const SystemSpec& spec, const StepSource& source,
                              std::vector<OnlineLogEntry>* log = nullptr,
                              const OnlineOptions& options = {});

}  // namespace projstark

#endif  // PROJSTARK_PROTOCOL_H_
