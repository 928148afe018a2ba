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

#include "projstark/proof_io.h"

#include <charconv>

#include <nlohmann/json.hpp>
#include "projstark/errors.h"

namespace projstark {

using nlohmann::json;

namespace {

[[noreturn]] void Malformed(const std::string& what) { Throw(ErrorCode::kMalformedProof, what); }

json Num(uint64_t v) { return std::to_string(v); }

uint64_t ReadU64(const json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<uint64_t>();
  if (!j.is_string()) Malformed(std::string(what) + ": expected a base-10 string");
  const std::string& s = j.get_ref<const std::string&>();
  uint64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
    Malformed(std::string(what) + ": '" + s + "' is not a base-10 integer");
  }
  return v;
}

int64_t ReadI64(const json& j, const char* what) {
  if (j.is_number_integer()) return j.get<int64_t>();
  if (!j.is_string()) Malformed(std::string(what) + ": expected a base-10 string");
  const std::string& s = j.get_ref<const std::string&>();
  int64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
    Malformed(std::string(what) + ": '" + s + "' is not a base-10 integer");
  }
  return v;
}

const json& Field(const json& obj, const char* key) {
  if (!obj.is_object()) Malformed(std::string("expected an object around '") + key + "'");
  auto it = obj.find(key);
  if (it == obj.end()) Malformed(std::string("missing field '") + key + "'");
  return *it;
}

const json& Array(const json& j, const char* what, size_t max_size = SIZE_MAX) {
  if (!j.is_array()) Malformed(std::string(what) + ": expected an array");
  if (j.size() > max_size) Malformed(std::string(what) + ": too many entries");
  return j;
}

Digest ReadDigest(const json& j) {
  if (!j.is_string()) Malformed("digest: expected a hex string");
  return DigestFromHex(j.get<std::string>());
}

std::vector<Digest> ReadDigests(const json& j, const char* what) {
  std::vector<Digest> out;
  for (const auto& d : Array(j, what)) out.push_back(ReadDigest(d));
  return out;
}

std::vector<uint64_t> ReadU64s(const json& j, const char* what) {
  std::vector<uint64_t> out;
  for (const auto& v : Array(j, what)) out.push_back(ReadU64(v, what));
  return out;
}

json DigestsJson(const std::vector<Digest>& ds) {
  json out = json::array();
  for (const auto& d : ds) out.push_back(ToHex(d));
  return out;
}

json U64sJson(const std::vector<uint64_t>& vs) {
  json out = json::array();
  for (uint64_t v : vs) out.push_back(Num(v));
  return out;
}

json OpeningJson(const Opening& o) {
  return {{"index", Num(o.index)}, {"value", Num(o.value)}, {"path", DigestsJson(o.path)}};
}

Opening ReadOpening(const json& j) {
  // A path longer than 64 levels cannot come from any table we build.
  return {ReadU64(Field(j, "index"), "opening index"), ReadU64(Field(j, "value"), "opening value"),
          [&] {
            const json& p = Array(Field(j, "path"), "opening path", 64);
            return ReadDigests(p, "opening path");
          }()};
}

json OpeningsJson(const std::vector<Opening>& os) {
  json out = json::array();
  for (const auto& o : os) out.push_back(OpeningJson(o));
  return out;
}

std::vector<Opening> ReadOpenings(const json& j, const char* what) {
  std::vector<Opening> out;
  for (const auto& o : Array(j, what)) out.push_back(ReadOpening(o));
  return out;
}

TranscriptMode ReadMode(const json& j) {
  if (j == "replay") return TranscriptMode::kReplay;
  if (j == "fiat-shamir") return TranscriptMode::kFiatShamir;
  Malformed("unknown transcript mode " + j.dump());
}

}  // namespace

std::string SerializeProof(const Proof& proof) {
  const ProofPublics& p = proof.publics;
  json publics = {{"q", Num(p.modulus)},
                  {"N", Num(p.num_steps)},
                  {"n", Num(p.dimension)},
                  {"g", Num(p.generator)},
                  {"system_hash", ToHex(p.system_hash)},
                  {"mode", TranscriptModeName(p.mode)},
                  {"degree_bound", std::to_string(p.claimed_degree_bound)},
                  {"salt", p.salt}};
  const TraceCommitments& c = proof.commitments;
  json commitments = {{"z", DigestsJson(c.z)},
                      {"alpha_up", DigestsJson(c.alpha_up)},
                      {"alpha_lo", DigestsJson(c.alpha_lo)},
                      {"delta", DigestsJson(c.delta)},
                      {"boundary", DigestsJson(c.boundary)},
                      {"composition", ToHex(c.composition)}};
  json layers = json::array();
  for (const auto& layer : proof.fri_layers) {
    json l = {{"beta", Num(layer.beta)}};
    if (layer.root) l["root"] = ToHex(*layer.root);
    if (layer.coefficients) l["coefficients"] = U64sJson(*layer.coefficients);
    layers.push_back(std::move(l));
  }
  json queries = json::array();
  for (const auto& q : proof.queries) {
    json fri = json::array();
    for (const auto& [pos, neg] : q.fri) fri.push_back({OpeningJson(pos), OpeningJson(neg)});
    queries.push_back({{"x", Num(q.x)},
                       {"z", OpeningsJson(q.z)},
                       {"z_shifted", OpeningsJson(q.z_shifted)},
                       {"alpha_up", OpeningsJson(q.alpha_up)},
                       {"alpha_lo", OpeningsJson(q.alpha_lo)},
                       {"delta", OpeningsJson(q.delta)},
                       {"boundary", OpeningsJson(q.boundary)},
                       {"composition", OpeningJson(q.composition)},
                       {"composition_neg", OpeningJson(q.composition_neg)},
                       {"fri", std::move(fri)}});
  }
  json out = {{"version", kProofFormatVersion},
              {"publics", std::move(publics)},
              {"commitments", std::move(commitments)},
              {"fri_layers", std::move(layers)},
              {"fri_final", Num(proof.fri_final)},
              {"queries", std::move(queries)}};
  if (proof.challenges) {
    out["challenges"] = {{"gammas", U64sJson(proof.challenges->gammas)},
                         {"betas", U64sJson(proof.challenges->betas)},
                         {"samples", U64sJson(proof.challenges->samples)}};
  }
  return out.dump(2) + "\n";
}

Proof ParseProof(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    Malformed(std::string("proof is not valid JSON: ") + e.what());
  }
  try {
    if (!root.is_object()) Malformed("proof must be a JSON object");
    const json& version = Field(root, "version");
    if (!version.is_number_integer() || version.get<int64_t>() != kProofFormatVersion) {
      Malformed("unsupported proof version " + version.dump());
    }
    Proof proof;
    const json& p = Field(root, "publics");
    proof.publics.modulus = ReadU64(Field(p, "q"), "q");
    proof.publics.num_steps = ReadU64(Field(p, "N"), "N");
    proof.publics.dimension = ReadU64(Field(p, "n"), "n");
    proof.publics.generator = ReadU64(Field(p, "g"), "g");
    proof.publics.system_hash = ReadDigest(Field(p, "system_hash"));
    proof.publics.mode = ReadMode(Field(p, "mode"));
    proof.publics.claimed_degree_bound = ReadI64(Field(p, "degree_bound"), "degree_bound");
    const json& salt = Field(p, "salt");
    if (!salt.is_string()) Malformed("salt must be a string");
    proof.publics.salt = salt.get<std::string>();

    const json& c = Field(root, "commitments");
    proof.commitments.z = ReadDigests(Field(c, "z"), "z commitments");
    proof.commitments.alpha_up = ReadDigests(Field(c, "alpha_up"), "alpha_up commitments");
    proof.commitments.alpha_lo = ReadDigests(Field(c, "alpha_lo"), "alpha_lo commitments");
    proof.commitments.delta = ReadDigests(Field(c, "delta"), "delta commitments");
    proof.commitments.boundary = ReadDigests(Field(c, "boundary"), "boundary commitments");
    proof.commitments.composition = ReadDigest(Field(c, "composition"));

    for (const auto& l : Array(Field(root, "fri_layers"), "fri_layers", kMaxFriLayers)) {
      FriLayerRecord rec;
      rec.beta = ReadU64(Field(l, "beta"), "beta");
      if (l.contains("root")) rec.root = ReadDigest(l["root"]);
      if (l.contains("coefficients")) rec.coefficients = ReadU64s(l["coefficients"], "coefficients");
      proof.fri_layers.push_back(std::move(rec));
    }
    proof.fri_final = ReadU64(Field(root, "fri_final"), "fri_final");

    for (const auto& q : Array(Field(root, "queries"), "queries", kMaxQueries)) {
      QueryOpenings qo;
      qo.x = ReadU64(Field(q, "x"), "x");
      qo.z = ReadOpenings(Field(q, "z"), "z openings");
      qo.z_shifted = ReadOpenings(Field(q, "z_shifted"), "z_shifted openings");
      qo.alpha_up = ReadOpenings(Field(q, "alpha_up"), "alpha_up openings");
      qo.alpha_lo = ReadOpenings(Field(q, "alpha_lo"), "alpha_lo openings");
      qo.delta = ReadOpenings(Field(q, "delta"), "delta openings");
      qo.boundary = ReadOpenings(Field(q, "boundary"), "boundary openings");
      qo.composition = ReadOpening(Field(q, "composition"));
      qo.composition_neg = ReadOpening(Field(q, "composition_neg"));
      for (const auto& pair : Array(Field(q, "fri"), "fri openings", kMaxFriLayers)) {
        if (!pair.is_array() || pair.size() != 2) Malformed("fri opening must be a pair");
        qo.fri.emplace_back(ReadOpening(pair[0]), ReadOpening(pair[1]));
      }
      proof.queries.push_back(std::move(qo));
    }

    if (root.contains("challenges")) {
      const json& ch = root["challenges"];
      proof.challenges = InjectedChallenges{ReadU64s(Field(ch, "gammas"), "gammas"),
                                            ReadU64s(Field(ch, "betas"), "betas"),
                                            ReadU64s(Field(ch, "samples"), "samples")};
    }
    return proof;
  } catch (const json::exception& e) {
    Malformed(std::string("proof structure: ") + e.what());
  }
}

}  // namespace projstark
