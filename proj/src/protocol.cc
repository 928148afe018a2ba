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

#include "projstark/protocol.h"

#include <sstream>

#include "projstark/errors.h"

namespace projstark {

namespace {

constexpr uint8_t kTagPublics = 0x10;
constexpr uint8_t kTagTraceRoot = 0x11;
constexpr uint8_t kTagBoundaryRoot = 0x12;
constexpr uint8_t kTagCompositionRoot = 0x13;
constexpr uint8_t kTagDegreeBound = 0x14;
constexpr uint8_t kTagLayerRoot = 0x15;
constexpr uint8_t kTagFinal = 0x16;

constexpr char kProtocolLabel[] = "projstark/v1";

void AbsorbPublics(Transcript& t, const ProofPublics& pub) {
  ByteWriter w;
  w.Bytes(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(kProtocolLabel),
                                   sizeof(kProtocolLabel) - 1));
  w.U64(pub.modulus);
  w.U64(pub.num_steps);
  w.U64(pub.dimension);
  w.U64(pub.generator);
  w.Bytes(pub.system_hash);
  w.U8(pub.mode == TranscriptMode::kReplay ? 0 : 1);
  w.Bytes(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(pub.salt.data()),
                                   pub.salt.size()));
  t.Absorb(kTagPublics, w.bytes());
}

void AbsorbTraceRoots(Transcript& t, const TraceCommitments& c) {
  for (const auto* column : {&c.z, &c.alpha_up, &c.alpha_lo, &c.delta}) {
    for (const Digest& d : *column) t.AbsorbDigest(kTagTraceRoot, d);
  }
  for (const Digest& d : c.boundary) t.AbsorbDigest(kTagBoundaryRoot, d);
}

struct CommittedTable {
  std::vector<FieldElement> values;
  MerkleTree tree;
};

CommittedTable CommitPolynomial(const Polynomial& p, const EvaluationDomain& domain) {
  std::vector<FieldElement> values = p.EvaluateMany(domain.points());
  MerkleTree tree(values);
  return {std::move(values), std::move(tree)};
}

Opening OpenAt(const CommittedTable& table, const EvaluationDomain& domain,
               const FieldElement& point) {
  const std::optional<size_t> index = domain.IndexOf(point);
  if (!index) Throw(ErrorCode::kIndexOutOfRange, "point " + point.ToString() + " is not committed");
  return {*index, table.values[*index].value(), table.tree.Open(*index).siblings};
}

std::vector<FieldElement> DrawSamples(Transcript& t, const PrimeField& field,
                                      const EvaluationDomain& d0, size_t count) {
  std::vector<FieldElement> xs;
  for (size_t k = 0; k < count; ++k) {
    xs.push_back(t.Draw(ChallengeKind::kSamplePoint, field,
                        [&](const FieldElement& x) { return !d0.Contains(x); }));
  }
  return xs;
}

}  // namespace

Digest SystemHash(const SystemSpec& spec, uint64_t modulus) {
  ByteWriter w;
  w.U64(modulus);
  w.U64(spec.num_steps);
  w.U64(spec.dimension());
  for (const auto& row : spec.a_hat) {
    for (int64_t a : row) w.I64(a);
  }
  for (int64_t v : spec.z_upper) w.I64(v);
  for (int64_t v : spec.z_lower) w.I64(v);
  return Sha256(w.bytes());
}

Proof Prove(const ExecutionTrace& trace, const PrimeField& field, Transcript& transcript,
            const ProveOptions& options, std::optional<ProverArtifacts>* artifacts) {
  const SystemSpec& spec = trace.spec;
  spec.Validate();
  trace.CheckShape();
  const bool force = options.faults.force_commit;
  const size_t n = spec.dimension();
  const size_t steps = spec.num_steps;
  if (!force) {
    if (trace.z_rows.front() != spec.z_init) {
      Throw(ErrorCode::kInvalidTrace, "trace does not start at z_init");
    }
    for (size_t k = 0; k < steps; ++k) {
      const OnlineVerdict v = OnlineCheck(spec, trace.step(k));
      if (!v.accepted()) {
        Throw(ErrorCode::kInvalidTrace, "step " + std::to_string(k) + " fails the online check: " +
                                            v.ToString());
      }
    }
  }

  const FieldTrace ft = LiftTrace(trace, field, LiftOptions{.check_products = !force});
  const CyclicDomain domain = CyclicDomain::Build(field, steps + 1);
  const EvaluationDomain d0 = EvaluationDomain::LayerZero(domain);
  TracePolynomials tp = BuildTracePolys(ft, domain);
  const auto numerators = BuildNumerators(tp, ft.system, domain);
  CompositionSet cs = BuildCompositions(numerators, tp, ft.system, domain,
                                        CompositionOptions{.drop_remainders = force});

  std::vector<Polynomial> boundary;
  const Polynomial x_minus_one = Polynomial::Linear(field.One());
  for (size_t i = 0; i < n; ++i) {
    DivisionResult div =
        DivideExact(tp.z[i] - Polynomial::Constant(ft.system.z_init[i]), x_minus_one);
    if (!div.remainder_zero() && !force) {
      Throw(ErrorCode::kInvalidTrace, "boundary condition fails at z" + std::to_string(i + 1));
    }
    boundary.push_back(std::move(div.quotient));
  }

  Proof proof;
  proof.publics.modulus = field.modulus();
  proof.publics.num_steps = steps;
  proof.publics.dimension = n;
  proof.publics.generator = domain.generator().value();
  proof.publics.system_hash = SystemHash(spec, field.modulus());
  proof.publics.mode = transcript.mode();
  proof.publics.salt = options.salt;
  AbsorbPublics(transcript, proof.publics);

  std::vector<CommittedTable> z_tables, up_tables, lo_tables, delta_tables, boundary_tables;
  for (size_t i = 0; i < n; ++i) {
    z_tables.push_back(CommitPolynomial(tp.z[i], d0));
    up_tables.push_back(CommitPolynomial(tp.alpha_up[i], d0));
    lo_tables.push_back(CommitPolynomial(tp.alpha_lo[i], d0));
    delta_tables.push_back(CommitPolynomial(tp.delta[i], d0));
    boundary_tables.push_back(CommitPolynomial(boundary[i], d0));
  }
  auto roots = [](const std::vector<CommittedTable>& tables) {
    std::vector<Digest> out;
    for (const auto& t : tables) out.push_back(t.tree.root());
    return out;
  };
  proof.commitments.z = roots(z_tables);
  proof.commitments.alpha_up = roots(up_tables);
  proof.commitments.alpha_lo = roots(lo_tables);
  proof.commitments.delta = roots(delta_tables);
  proof.commitments.boundary = roots(boundary_tables);
  AbsorbTraceRoots(transcript, proof.commitments);

  std::vector<FieldElement> gammas;
  for (size_t k = 0; k < n * kNumFamilies; ++k) {
    gammas.push_back(transcript.Draw(ChallengeKind::kGamma, field));
  }
  CombinedPolynomial combined = Combine(cs, gammas);
  const Polynomial& q = options.faults.replace_composition ? *options.faults.replace_composition
                                                           : combined.q;
  const int64_t bound = transcript.mode() == TranscriptMode::kReplay
                            ? combined.degree_bound
                            : WorstCaseDegreeBound(steps);
  proof.publics.claimed_degree_bound = bound;

  const CommittedTable q_table = CommitPolynomial(q, d0);
  proof.commitments.composition = q_table.tree.root();
  transcript.AbsorbDigest(kTagCompositionRoot, q_table.tree.root());
  transcript.AbsorbU64(kTagDegreeBound, static_cast<uint64_t>(bound));

  std::vector<CommittedTable> layer_tables;  // layer_tables[j - 1] commits Q_j
  std::vector<FriLayer> layers =
      CommitPhase(q, bound, d0, [&](const FriLayer& layer, size_t round) {
        if (round > 0) {
          layer_tables.push_back(CommitPolynomial(layer.poly, layer.eval_domain));
          transcript.AbsorbDigest(kTagLayerRoot, layer_tables.back().tree.root());
        }
        return transcript.Draw(ChallengeKind::kBeta, field);
      });
  proof.fri_final = layers.back().poly.coefficient(0).value();
  transcript.AbsorbU64(kTagFinal, proof.fri_final);

  const bool clear = options.clear_layers.value_or(transcript.mode() == TranscriptMode::kReplay);
  for (size_t j = 0; j + 1 < layers.size(); ++j) {
    FriLayerRecord rec;
    rec.beta = layers[j].beta->value();
    if (j > 0) rec.root = layer_tables[j - 1].tree.root();
    if (clear) {
      std::vector<uint64_t> coeffs;
      for (const auto& c : layers[j].poly.coefficients()) coeffs.push_back(c.value());
      rec.coefficients = std::move(coeffs);
    }
    proof.fri_layers.push_back(std::move(rec));
  }

  const std::vector<FieldElement> samples = DrawSamples(transcript, field, d0, options.num_queries);
  std::vector<FriQueryAnswer> answers;
  for (const FieldElement& x : samples) {
    QueryOpenings qo;
    qo.x = x.value();
    const FieldElement gx = x * domain.generator();
    for (size_t i = 0; i < n; ++i) {
      qo.z.push_back(OpenAt(z_tables[i], d0, x));
      qo.z_shifted.push_back(OpenAt(z_tables[i], d0, gx));
      qo.alpha_up.push_back(OpenAt(up_tables[i], d0, x));
      qo.alpha_lo.push_back(OpenAt(lo_tables[i], d0, x));
      qo.delta.push_back(OpenAt(delta_tables[i], d0, x));
      qo.boundary.push_back(OpenAt(boundary_tables[i], d0, x));
    }
    qo.composition = OpenAt(q_table, d0, x);
    qo.composition_neg = OpenAt(q_table, d0, -x);
    FieldElement y = x * x;
    for (size_t j = 1; j + 1 < layers.size(); ++j) {
      const auto& table = layer_tables[j - 1];
      qo.fri.emplace_back(OpenAt(table, layers[j].eval_domain, y),
                          OpenAt(table, layers[j].eval_domain, -y));
      y = y * y;
    }
    proof.queries.push_back(std::move(qo));
    answers.push_back(AnswerQuery(layers, x));
  }

  if (transcript.mode() == TranscriptMode::kReplay) proof.challenges = transcript.drawn();
  if (artifacts) {
    *artifacts = ProverArtifacts{std::move(tp), std::move(cs), std::move(combined), std::move(layers),
                  std::move(answers)};
  }
  return proof;
}

const char* StageName(VerificationStage stage) {
  switch (stage) {
    case VerificationStage::kNone: return "none";
    case VerificationStage::kOnline: return "online";
    case VerificationStage::kCommitment: return "commitment";
    case VerificationStage::kBoundary: return "boundary";
    case VerificationStage::kConsistency: return "consistency";
    case VerificationStage::kFriCommit: return "fri_commit";
    case VerificationStage::kFriQuery: return "fri_query";
  }
  return "unknown";
}

std::string VerificationReport::ToString() const {
  if (accepted) return "accept";
  return std::string("reject at ") + StageName(stage) + ": " + detail;
}

namespace {

void CheckStructure(const Proof& proof, size_t n) {
  auto fail = [](const std::string& what) { Throw(ErrorCode::kMalformedProof, what); };
  if (proof.publics.dimension != n) fail("proof dimension does not match the system");
  const auto& c = proof.commitments;
  for (const auto* column : {&c.z, &c.alpha_up, &c.alpha_lo, &c.delta, &c.boundary}) {
    if (column->size() != n) fail("commitment list has wrong length");
  }
  if (proof.fri_layers.empty() || proof.fri_layers.size() > kMaxFriLayers) {
    fail("FRI layer count outside [1, " + std::to_string(kMaxFriLayers) + "]");
  }
  for (size_t j = 0; j < proof.fri_layers.size(); ++j) {
    if (proof.fri_layers[j].root.has_value() != (j > 0)) fail("FRI layer root placement");
  }
  if (proof.queries.empty() || proof.queries.size() > kMaxQueries) {
    fail("query count outside [1, " + std::to_string(kMaxQueries) + "]");
  }
  for (const auto& qo : proof.queries) {
    for (const auto* list : {&qo.z, &qo.z_shifted, &qo.alpha_up, &qo.alpha_lo, &qo.delta,
                             &qo.boundary}) {
      if (list->size() != n) fail("query opening list has wrong length");
    }
    if (qo.fri.size() + 1 != proof.fri_layers.size()) fail("query FRI openings per layer");
  }
}

void CheckCanonical(const Proof& proof, uint64_t q) {
  auto check = [q](uint64_t v) {
    if (v >= q) Throw(ErrorCode::kMalformedProof, "value " + std::to_string(v) + " >= q");
  };
  check(proof.fri_final);
  for (const auto& layer : proof.fri_layers) {
    check(layer.beta);
    if (layer.coefficients) {
      for (uint64_t v : *layer.coefficients) check(v);
    }
  }
  for (const auto& qo : proof.queries) {
    check(qo.x);
    for (const auto* list : {&qo.z, &qo.z_shifted, &qo.alpha_up, &qo.alpha_lo, &qo.delta,
                             &qo.boundary}) {
      for (const auto& o : *list) check(o.value);
    }
    check(qo.composition.value);
    check(qo.composition_neg.value);
    for (const auto& [pos, neg] : qo.fri) {
      check(pos.value);
      check(neg.value);
    }
  }
}

VerificationReport Reject(VerificationStage stage, std::string detail) {
  VerificationReport r;
  r.stage = stage;
  r.detail = std::move(detail);
  return r;
}

bool OpeningValid(const Digest& root, const EvaluationDomain& domain, const FieldElement& point,
                  const Opening& opening) {
  const std::optional<size_t> index = domain.IndexOf(point);
  if (!index || *index != opening.index) return false;
  return VerifyOpening({root, domain.size()}, opening.index,
                       FieldElement(opening.value, point.modulus()), {opening.path});
}

Polynomial ClearLayer(const PrimeField& field, const std::vector<uint64_t>& coeffs) {
  std::vector<FieldElement> c;
  for (uint64_t v : coeffs) c.push_back(field.FromCanonical(v));
  return Polynomial(field, std::move(c));
}

}  // namespace

VerificationReport Verify(const SystemSpec& spec, const PrimeField& field, const Proof& proof,
                          Transcript& transcript, const VerifyOptions& options) {
  const size_t n = spec.dimension();
  const uint64_t q = field.modulus();
  CheckStructure(proof, n);
  const FieldSystem sys = LiftSystem(spec, field);
  const CyclicDomain domain = CyclicDomain::Build(field, spec.num_steps + 1);

  const ProofPublics& pub = proof.publics;
  if (pub.modulus != q || pub.num_steps != spec.num_steps ||
      pub.generator != domain.generator().value() || pub.system_hash != SystemHash(spec, q)) {
    return Reject(VerificationStage::kCommitment, "public inputs do not match the statement");
  }
  if (pub.mode != transcript.mode()) {
    return Reject(VerificationStage::kCommitment, std::string("proof was made in ") +
                                                      TranscriptModeName(pub.mode) + " mode");
  }
  CheckCanonical(proof, q);
  const EvaluationDomain d0 = EvaluationDomain::LayerZero(domain);

  // Rebuild every challenge from the proof's messages.
  std::vector<FieldElement> gammas, betas, samples;
  try {
    AbsorbPublics(transcript, pub);
    AbsorbTraceRoots(transcript, proof.commitments);
    for (size_t k = 0; k < n * kNumFamilies; ++k) {
      gammas.push_back(transcript.Draw(ChallengeKind::kGamma, field));
    }
    transcript.AbsorbDigest(kTagCompositionRoot, proof.commitments.composition);
    transcript.AbsorbU64(kTagDegreeBound, static_cast<uint64_t>(pub.claimed_degree_bound));
    for (size_t j = 0; j < proof.fri_layers.size(); ++j) {
      if (j > 0) transcript.AbsorbDigest(kTagLayerRoot, *proof.fri_layers[j].root);
      betas.push_back(transcript.Draw(ChallengeKind::kBeta, field));
    }
    transcript.AbsorbU64(kTagFinal, proof.fri_final);
    samples = DrawSamples(transcript, field, d0, options.num_queries.value_or(proof.queries.size()));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kTranscriptExhausted && e.code() != ErrorCode::kExcludedChallenge) {
      throw;
    }
    return Reject(VerificationStage::kCommitment, std::string("transcript: ") + e.what());
  }
  if (samples.size() != proof.queries.size()) {
    return Reject(VerificationStage::kCommitment,
                  "expected " + std::to_string(samples.size()) + " queries, proof has " +
                      std::to_string(proof.queries.size()));
  }

  std::vector<EvaluationDomain> domains{d0};
  for (size_t j = 1; j < proof.fri_layers.size(); ++j) domains.push_back(domains.back().Squared());
  std::vector<std::optional<Polynomial>> clear_layers;
  for (const auto& layer : proof.fri_layers) {
    clear_layers.push_back(layer.coefficients
                               ? std::optional<Polynomial>(ClearLayer(field, *layer.coefficients))
                               : std::nullopt);
  }

  // (a) commitments
  const auto& c = proof.commitments;
  for (size_t k = 0; k < proof.queries.size(); ++k) {
    const QueryOpenings& qo = proof.queries[k];
    const FieldElement x = samples[k];
    const std::string where = "query " + std::to_string(k) + " (x = " + x.ToString() + ")";
    if (qo.x != x.value()) {
      return Reject(VerificationStage::kCommitment,
                    where + ": sample point differs from the transcript");
    }
    const FieldElement gx = x * domain.generator();
    for (size_t i = 0; i < n; ++i) {
      const std::string col = std::to_string(i + 1);
      if (!OpeningValid(c.z[i], d0, x, qo.z[i]) || !OpeningValid(c.z[i], d0, gx, qo.z_shifted[i])) {
        return Reject(VerificationStage::kCommitment, where + ": f_z" + col + " opening");
      }
      if (!OpeningValid(c.alpha_up[i], d0, x, qo.alpha_up[i]) ||
          !OpeningValid(c.alpha_lo[i], d0, x, qo.alpha_lo[i]) ||
          !OpeningValid(c.delta[i], d0, x, qo.delta[i])) {
        return Reject(VerificationStage::kCommitment, where + ": slack opening for z" + col);
      }
      if (!OpeningValid(c.boundary[i], d0, x, qo.boundary[i])) {
        return Reject(VerificationStage::kCommitment, where + ": boundary quotient opening " + col);
      }
    }
    if (!OpeningValid(c.composition, d0, x, qo.composition) ||
        !OpeningValid(c.composition, d0, -x, qo.composition_neg)) {
      return Reject(VerificationStage::kCommitment, where + ": composition opening");
    }
    FieldElement y = x;
    for (size_t j = 0; j < proof.fri_layers.size(); ++j) {
      const Opening& pos = j == 0 ? qo.composition : qo.fri[j - 1].first;
      const Opening& neg = j == 0 ? qo.composition_neg : qo.fri[j - 1].second;
      if (j > 0 && (!OpeningValid(*proof.fri_layers[j].root, domains[j], y, pos) ||
                    !OpeningValid(*proof.fri_layers[j].root, domains[j], -y, neg))) {
        return Reject(VerificationStage::kCommitment,
                      where + ": FRI layer " + std::to_string(j) + " opening");
      }
      if (clear_layers[j] && (clear_layers[j]->Evaluate(y).value() != pos.value ||
                              clear_layers[j]->Evaluate(-y).value() != neg.value)) {
        return Reject(VerificationStage::kCommitment,
                      where + ": published coefficients of layer " + std::to_string(j) +
                          " disagree with the committed values");
      }
      y = y * y;
    }
  }

  auto element = [&](uint64_t v) { return FieldElement(v, q); };

  // (b) boundary: f_z(x) - z_init = b(x) * (x - 1)
  for (size_t k = 0; k < proof.queries.size(); ++k) {
    const QueryOpenings& qo = proof.queries[k];
    const FieldElement x = samples[k];
    for (size_t i = 0; i < n; ++i) {
      if (element(qo.z[i].value) - sys.z_init[i] !=
          element(qo.boundary[i].value) * (x - field.One())) {
        return Reject(VerificationStage::kBoundary,
                      "f_z" + std::to_string(i + 1) + "(g^0) != z_init at query " +
                          std::to_string(k));
      }
    }
  }

  // (c) consistency of Q with the trace openings
  for (size_t k = 0; k < proof.queries.size(); ++k) {
    const QueryOpenings& qo = proof.queries[k];
    PointEvaluations values;
    for (size_t i = 0; i < n; ++i) {
      values.z.push_back(element(qo.z[i].value));
      values.z_shifted.push_back(element(qo.z_shifted[i].value));
      values.alpha_up.push_back(element(qo.alpha_up[i].value));
      values.alpha_lo.push_back(element(qo.alpha_lo[i].value));
      values.delta.push_back(element(qo.delta[i].value));
    }
    const FieldElement expected = CombinedAt(sys, values, samples[k], domain, gammas);
    if (expected.value() != qo.composition.value) {
      return Reject(VerificationStage::kConsistency,
                    "Q(" + samples[k].ToString() + ") = " + std::to_string(qo.composition.value) +
                        " but the trace openings give " + expected.ToString());
    }
  }

  // (d) FRI commit phase shape
  const int64_t worst = WorstCaseDegreeBound(spec.num_steps);
  const int64_t bound =
      transcript.mode() == TranscriptMode::kReplay ? pub.claimed_degree_bound : worst;
  if (pub.claimed_degree_bound < 0 || pub.claimed_degree_bound > worst ||
      (transcript.mode() == TranscriptMode::kFiatShamir && pub.claimed_degree_bound != worst)) {
    return Reject(VerificationStage::kFriCommit,
                  "claimed degree bound " + std::to_string(pub.claimed_degree_bound) +
                      " is not acceptable (worst case " + std::to_string(worst) + ")");
  }
  const size_t rounds = FoldingRounds(bound);
  if (proof.fri_layers.size() != rounds) {
    return Reject(VerificationStage::kFriCommit,
                  "expected " + std::to_string(rounds) + " folding rounds, proof has " +
                      std::to_string(proof.fri_layers.size()));
  }
  for (size_t j = 0; j < rounds; ++j) {
    if (proof.fri_layers[j].beta != betas[j].value()) {
      return Reject(VerificationStage::kFriCommit, "beta_" + std::to_string(j) +
                                                       " differs from the transcript");
    }
    if (clear_layers[j] && clear_layers[j]->degree() > (bound >> j)) {
      return Reject(VerificationStage::kFriCommit,
                    "layer " + std::to_string(j) + " has degree " +
                        std::to_string(clear_layers[j]->degree()) + " > " +
                        std::to_string(bound >> j));
    }
  }

  // (e) FRI query phase
  VerificationReport report;
  for (size_t k = 0; k < proof.queries.size(); ++k) {
    const QueryOpenings& qo = proof.queries[k];
    FriQueryAnswer answer{samples[k], {}, element(proof.fri_final)};
    answer.layer_values.emplace_back(element(qo.composition.value),
                                     element(qo.composition_neg.value));
    for (const auto& [pos, neg] : qo.fri) {
      answer.layer_values.emplace_back(element(pos.value), element(neg.value));
    }
    const FriQueryResult result = QueryCheck(betas, answer);
    QueryTrace qt{qo.x, {}, {}};
    for (const auto& v : result.computed) qt.computed.push_back(v.value());
    for (const auto& v : result.queried) qt.queried.push_back(v.value());
    report.query_traces.push_back(std::move(qt));
    if (!result.accepted) {
      VerificationReport r = Reject(VerificationStage::kFriQuery,
                                    "folding identity fails at layer " +
                                        std::to_string(result.failed_layer) + " for x = " +
                                        samples[k].ToString());
      r.query_traces = std::move(report.query_traces);
      return r;
    }
  }
  report.accepted = true;
  return report;
}

StepSource HonestStepSource(const SystemSpec& spec) {
  return [spec](size_t, const IntVector& z, size_t) { return StepSlack(spec, z); };
}

ExecutionTrace RunOnlineStage(const SystemSpec& spec, const StepSource& source,
                              std::vector<OnlineLogEntry>* log, const OnlineOptions& options) {
  spec.Validate();
  ExecutionTrace trace;
  trace.spec = spec;
  trace.z_rows.push_back(spec.z_init);
  for (size_t k = 0; k < spec.num_steps; ++k) {
    for (size_t attempt = 0;; ++attempt) {
      StepRecord rec = source(k, trace.z_rows.back(), attempt);
      const OnlineVerdict verdict = OnlineCheck(spec, rec);
      if (log) log->push_back({k, attempt, verdict});
      if (verdict.accepted() && rec.alpha_up.size() == spec.dimension() &&
          rec.alpha_lo.size() == spec.dimension()) {
        trace.z_rows.push_back(std::move(rec.z_next));
        trace.alpha_up_rows.push_back(std::move(rec.alpha_up));
        trace.alpha_lo_rows.push_back(std::move(rec.alpha_lo));
        trace.delta_rows.push_back(std::move(rec.delta));
        break;
      }
      if (attempt >= options.max_retries) {
        Throw(ErrorCode::kOnlineFailure, "step " + std::to_string(k) + " rejected after " +
                                             std::to_string(options.max_retries) +
                                             " redo requests: " + verdict.ToString());
      }
    }
  }
  return trace;
}

}  // namespace projstark
