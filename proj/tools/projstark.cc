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

// projstark: simulate projected linear dynamics and prove or verify the
// resulting execution trace.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "projstark/air.h"
#include "projstark/config_io.h"
#include "projstark/errors.h"
#include "projstark/fri.h"
#include "projstark/proof_io.h"
#include "projstark/protocol.h"
#include "projstark/worked_example.h"

namespace projstark {
namespace {

enum ExitCode : int {
  kExitAccept = 0,
  kExitConfig = 2,
  kExitProver = 3,
  kExitReject = 4,
  kExitMalformed = 5,
  kExitReplayMismatch = 6,
};

struct CommonFlags {
  std::string config;
  std::string mode;
  std::optional<size_t> queries;
  std::string out;
  bool force_commit = false;
  std::string trace;
  std::string proof;
  size_t row = 0;
  std::string column;
  int64_t value = 0;
};

struct CommandError {
  int exit_code;
  std::string message;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError{kExitConfig, "cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) throw CommandError{kExitConfig, "cannot write " + path};
}

RunConfig LoadConfig(const CommonFlags& flags) {
  RunConfig config = ParseRunConfig(ReadFile(flags.config));
  if (flags.mode == "replay") {
    config.mode = TranscriptMode::kReplay;
  } else if (flags.mode == "fiat-shamir") {
    config.mode = TranscriptMode::kFiatShamir;
  }
  if (flags.queries) config.num_queries = *flags.queries;
  ValidateRunConfig(config);
  return config;
}

void PrintTrace(const ExecutionTrace& trace, std::ostream& os) {
  const size_t n = trace.spec.dimension();
  os << std::setw(4) << "k";
  for (const char* name : {"z", "alpha_up", "alpha_lo", "delta"}) {
    for (size_t i = 1; i <= n; ++i) {
      os << std::setw(11) << (std::string(name) + std::to_string(i));
    }
  }
  os << "\n";
  for (size_t k = 0; k < trace.z_rows.size(); ++k) {
    os << std::setw(4) << k;
    for (int64_t v : trace.z_rows[k]) os << std::setw(11) << v;
    for (const auto* col : {&trace.alpha_up_rows, &trace.alpha_lo_rows, &trace.delta_rows}) {
      for (size_t i = 0; i < n; ++i) {
        if (k < col->size()) {
          os << std::setw(11) << (*col)[k][i];
        } else {
          os << std::setw(11) << "-";
        }
      }
    }
    os << "\n";
  }
}

int CmdSimulate(const CommonFlags& flags) {
  const RunConfig config = LoadConfig(flags);
  std::vector<OnlineLogEntry> log;
  const ExecutionTrace trace =
      RunOnlineStage(config.system, HonestStepSource(config.system), &log);
  PrintTrace(trace, std::cout);
  size_t rejected = 0;
  for (const auto& entry : log) {
    if (!entry.verdict.accepted()) {
      ++rejected;
      std::cout << "online: step " << entry.step << " attempt " << entry.attempt
                << " rejected: " << entry.verdict.ToString() << "\n";
    }
  }
  std::cout << "online: " << trace.num_steps() << " steps accepted, " << rejected
            << " rejections\n";
  if (!flags.out.empty()) {
    WriteFile(flags.out, SerializeTrace(trace));
    std::cout << "trace written to " << flags.out << "\n";
  }
  return kExitAccept;
}

Transcript MakeTranscript(const RunConfig& config, const std::optional<InjectedChallenges>& fallback) {
  if (config.mode == TranscriptMode::kFiatShamir) return Transcript::FiatShamir();
  if (config.challenges) return Transcript::Replay(*config.challenges);
  if (fallback) return Transcript::Replay(*fallback);
  throw CommandError{kExitConfig, "replay mode needs a \"challenges\" block in the config"};
}

int CmdProve(const CommonFlags& flags) {
  RunConfig config = LoadConfig(flags);
  if (config.mode == TranscriptMode::kReplay && config.challenges && !flags.queries) {
    config.num_queries = config.challenges->samples.size();
  }
  const ExecutionTrace trace = ParseTrace(ReadFile(flags.trace), config.system);
  const PrimeField field(config.modulus);
  Transcript transcript = MakeTranscript(config, std::nullopt);
  ProveOptions options;
  options.num_queries = config.num_queries;
  options.faults.force_commit = flags.force_commit;
  if (config.mode == TranscriptMode::kFiatShamir) {
    if (const char* seed = std::getenv("PROJSTARK_SEED")) options.salt = seed;
  }
  std::optional<ProverArtifacts> artifacts;
  Proof proof;
  try {
    proof = Prove(trace, field, transcript, options, &artifacts);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kTranscriptExhausted || e.code() == ErrorCode::kExcludedChallenge) {
      throw CommandError{kExitConfig, std::string("challenges: ") + e.what()};
    }
    throw CommandError{kExitProver, std::string("prover refused: ") + e.what()};
  }
  std::cout << "Q = " << artifacts->combined.q.ToString() << "\n";
  std::cout << "degree bound " << proof.publics.claimed_degree_bound << ", "
            << proof.fri_layers.size() << " folding rounds, final constant " << proof.fri_final
            << ", " << proof.queries.size() << " queries\n";
  const std::string text = SerializeProof(proof);
  if (flags.out.empty()) {
    std::cout << text;
  } else {
    WriteFile(flags.out, text);
    std::cout << "proof written to " << flags.out << "\n";
  }
  return kExitAccept;
}

int CmdVerify(const CommonFlags& flags) {
  RunConfig config = LoadConfig(flags);
  const std::string text = ReadFile(flags.proof);
  Proof proof;
  try {
    proof = ParseProof(text);
  } catch (const Error& e) {
    throw CommandError{kExitMalformed, std::string("malformed proof: ") + e.what()};
  }
  const PrimeField field(config.modulus);
  Transcript transcript = MakeTranscript(config, proof.challenges);
  VerifyOptions options;
  if (config.mode == TranscriptMode::kFiatShamir || flags.queries) {
    options.num_queries = config.num_queries;
  } else if (config.challenges) {
    options.num_queries = config.challenges->samples.size();
  }
  VerificationReport report;
  try {
    report = Verify(config.system, field, proof, transcript, options);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMalformedProof) {
      throw CommandError{kExitMalformed, std::string("malformed proof: ") + e.what()};
    }
    throw;
  }
  for (const auto& qt : report.query_traces) {
    std::cout << "x = " << qt.x << ": computed";
    for (uint64_t v : qt.computed) std::cout << " " << v;
    std::cout << " | queried";
    for (uint64_t v : qt.queried) std::cout << " " << v;
    std::cout << "\n";
  }
  std::cout << report.ToString() << "\n";
  return report.accepted ? kExitAccept : kExitReject;
}

// Compares one list of reproduced values against the reference list.
class GoldenCheck {
 public:
  template <typename Got, typename Want>
  void Compare(const std::string& name, const Got& got, const Want& want) {
    std::vector<std::string> g, w;
    for (const auto& v : got) g.push_back(std::to_string(v));
    for (const auto& v : want) w.push_back(std::to_string(v));
    if (g == w) {
      std::cout << "ok    " << name << ": " << Join(g) << "\n";
      return;
    }
    ++mismatches_;
    std::cout << "DIFF  " << name << "\n        expected " << Join(w) << "\n        got      "
              << Join(g) << "\n";
    for (size_t i = 0; i < std::max(g.size(), w.size()); ++i) {
      const std::string gi = i < g.size() ? g[i] : "<none>";
      const std::string wi = i < w.size() ? w[i] : "<none>";
      if (gi != wi) {
        std::cout << "        first divergence at entry " << i << ": expected " << wi << ", got "
                  << gi << "\n";
        break;
      }
    }
  }
  int mismatches() const { return mismatches_; }

 private:
  static std::string Join(const std::vector<std::string>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return "(" + s + ")";
  }
  int mismatches_ = 0;
};

std::vector<uint64_t> Coefficients(const Polynomial& p) {
  std::vector<uint64_t> out;
  for (const auto& c : p.coefficients()) out.push_back(c.value());
  return out;
}

int64_t DegreeOrZero(const Polynomial& p) { return p.IsZero() ? 0 : p.degree(); }

int CmdReplayPaper() {
  namespace ex = worked_example;
  const SystemSpec spec = ex::System();
  const PrimeField field(ex::kModulus);
  GoldenCheck check;

  const CyclicDomain domain = CyclicDomain::Build(field, ex::kNumSteps + 1);
  std::vector<uint64_t> points;
  for (const auto& p : domain.elements()) points.push_back(p.value());
  check.Compare("trace domain", points, ex::kTraceDomain);

  const ExecutionTrace trace = RunOnlineStage(spec, HonestStepSource(spec));
  Transcript transcript = Transcript::Replay(ex::Challenges());
  ProveOptions options;
  options.num_queries = ex::kSamples.size();
  std::optional<ProverArtifacts> artifacts;
  const Proof proof = Prove(trace, field, transcript, options, &artifacts);
  const TracePolynomials& tp = artifacts->trace_polys;

  std::vector<int64_t> trace_degrees;
  for (size_t i = 0; i < 2; ++i) trace_degrees.push_back(DegreeOrZero(tp.z[i]));
  for (size_t i = 0; i < 2; ++i) trace_degrees.push_back(DegreeOrZero(tp.delta[i]));
  for (size_t i = 0; i < 2; ++i) trace_degrees.push_back(DegreeOrZero(tp.alpha_lo[i]));
  for (size_t i = 0; i < 2; ++i) trace_degrees.push_back(DegreeOrZero(tp.alpha_up[i]));
  check.Compare("trace polynomial degrees", trace_degrees, ex::kTraceDegrees);

  std::vector<int64_t> composition_degrees;
  for (size_t l = 0; l < kNumFamilies; ++l) {
    for (size_t i = 0; i < 2; ++i) {
      composition_degrees.push_back(DegreeOrZero(artifacts->compositions.quotients[i][l]));
    }
  }
  check.Compare("composition degrees", composition_degrees, ex::kCompositionDegrees);

  std::vector<uint64_t> gammas;
  for (const auto& g : artifacts->combined.gammas) gammas.push_back(g.value());
  check.Compare("combination weights", gammas, ex::kGammas);
  check.Compare("combined polynomial", Coefficients(artifacts->combined.q), ex::kCombined);
  check.Compare("combined degree bound", std::vector<int64_t>{artifacts->combined.degree_bound},
                std::vector<int64_t>{ex::kCombinedDegreeBound});

  const auto& layers = artifacts->fri_layers;
  std::vector<uint64_t> betas;
  std::vector<int64_t> degrees;
  for (size_t j = 0; j + 1 < layers.size(); ++j) betas.push_back(layers[j].beta->value());
  for (size_t j = 1; j < layers.size(); ++j) degrees.push_back(DegreeOrZero(layers[j].poly));
  check.Compare("folding challenges", betas, ex::kBetas);
  const std::vector<std::vector<uint64_t>> want_layers = {
      {ex::kLayer1.begin(), ex::kLayer1.end()},
      {ex::kLayer2.begin(), ex::kLayer2.end()},
      {ex::kLayer3.begin(), ex::kLayer3.end()},
      {ex::kLayer4.begin(), ex::kLayer4.end()},
      {ex::kFinalConstant}};
  for (size_t j = 1; j <= want_layers.size(); ++j) {
    const std::vector<uint64_t> got =
        j < layers.size() ? Coefficients(layers[j].poly) : std::vector<uint64_t>{};
    check.Compare("folded layer " + std::to_string(j), got, want_layers[j - 1]);
  }
  check.Compare("folded layer degrees", degrees, ex::kLayerDegrees);

  Transcript verifier = Transcript::Replay(ex::Challenges());
  const VerificationReport report = Verify(spec, field, proof, verifier);
  const std::array<const std::array<uint64_t, 5>*, 2> chains = {&ex::kChainAt87, &ex::kChainAt291};
  for (size_t k = 0; k < ex::kSamples.size(); ++k) {
    const std::string name = "query chain at x = " + std::to_string(ex::kSamples[k]);
    if (k < report.query_traces.size()) {
      check.Compare(name + " (computed)", report.query_traces[k].computed, *chains[k]);
      check.Compare(name + " (queried)", report.query_traces[k].queried, *chains[k]);
    } else {
      check.Compare(name, std::vector<uint64_t>{}, *chains[k]);
    }
  }
  std::cout << "verification: " << report.ToString() << "\n";

  if (check.mismatches() == 0 && report.accepted) {
    std::cout << "all reference values reproduced\n";
    return kExitAccept;
  }
  std::cout << check.mismatches() << " reference list(s) differ\n";
  return kExitReplayMismatch;
}

int CmdTamper(const CommonFlags& flags) {
  const RunConfig config = LoadConfig(flags);
  ExecutionTrace trace = ParseTrace(ReadFile(flags.trace), config.system);
  TamperTrace(trace, flags.row, flags.column, flags.value);
  const std::string out = flags.out.empty() ? flags.trace : flags.out;
  WriteFile(out, SerializeTrace(trace));
  std::cout << "set " << flags.column << " at row " << flags.row << " to " << flags.value
            << " in " << out << "\n";
  return kExitAccept;
}

int ExitFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidConfig:
    case ErrorCode::kNotPrime:
    case ErrorCode::kNoSubgroup:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kIndexOutOfRange:
      return kExitConfig;
    case ErrorCode::kMalformedProof:
      return kExitMalformed;
    default:
      return kExitProver;
  }
}

}  // namespace
}  // namespace projstark

int main(int argc, char** argv) {
  using namespace projstark;
  CLI::App app{"Prove and verify executions of projected linear dynamics"};
  app.require_subcommand(1);
  CommonFlags flags;

  auto add_config = [&](CLI::App* cmd) {
    cmd->add_option("--config", flags.config, "run configuration (JSON)")->required();
  };
  auto add_mode = [&](CLI::App* cmd) {
    cmd->add_option("--mode", flags.mode, "transcript mode")
        ->check(CLI::IsMember({"replay", "fiat-shamir"}));
    cmd->add_option("--queries", flags.queries, "number of sample points")
        ->check(CLI::Range(size_t{1}, kMaxQueries));
  };

  CLI::App* simulate = app.add_subcommand("simulate", "run the online stage and write the trace");
  add_config(simulate);
  simulate->add_option("--out", flags.out, "trace output path");

  CLI::App* prove = app.add_subcommand("prove", "build a proof for a trace");
  add_config(prove);
  add_mode(prove);
  prove->add_option("--trace", flags.trace, "trace file")->required();
  prove->add_option("--out", flags.out, "proof output path");
  prove->add_flag("--force-commit", flags.force_commit,
                  "commit the trace interpolants even if the trace is inconsistent");

  CLI::App* verify = app.add_subcommand("verify", "check a proof");
  add_config(verify);
  add_mode(verify);
  verify->add_option("--proof", flags.proof, "proof file")->required();

  CLI::App* replay =
      app.add_subcommand("replay-paper", "rebuild the built-in reference example and compare");

  CLI::App* tamper = app.add_subcommand("tamper", "edit one cell of a trace file");
  add_config(tamper);
  tamper->add_option("--trace", flags.trace, "trace file")->required();
  tamper->add_option("--row", flags.row, "row k")->required();
  tamper->add_option("--column", flags.column, "z1.., alpha_up1.., alpha_lo1.., delta1..")
      ->required();
  tamper->add_option("--value", flags.value, "new integer value")->required();
  tamper->add_option("--out", flags.out, "output path (default: overwrite the trace)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (*simulate) return CmdSimulate(flags);
    if (*prove) return CmdProve(flags);
    if (*verify) return CmdVerify(flags);
    if (*replay) return CmdReplayPaper();
    if (*tamper) return CmdTamper(flags);
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitFor(e.code());
  }
  return kExitConfig;
}
