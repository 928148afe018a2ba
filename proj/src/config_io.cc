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

#include "projstark/config_io.h"

#include <charconv>
#include <cstdlib>

#include <nlohmann/json.hpp>
#include "projstark/errors.h"
#include "projstark/field.h"
#include "projstark/fri.h"

namespace projstark {

using nlohmann::json;

namespace {

[[noreturn]] void Bad(const std::string& what) { Throw(ErrorCode::kInvalidConfig, what); }

int64_t ReadInt(const json& j, const std::string& what) {
  if (j.is_number_integer()) return j.get<int64_t>();
  if (!j.is_string()) Bad(what + ": expected an integer or base-10 string");
  const std::string& s = j.get_ref<const std::string&>();
  int64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
    Bad(what + ": '" + s + "' is not a base-10 integer");
  }
  return v;
}

uint64_t ReadUnsigned(const json& j, const std::string& what) {
  if (j.is_number_unsigned()) return j.get<uint64_t>();
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    uint64_t v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (!s.empty() && ec == std::errc() && end == s.data() + s.size()) return v;
  }
  Bad(what + ": expected a non-negative integer");
}

const json& Require(const json& obj, const char* key) {
  if (!obj.is_object()) Bad(std::string("expected an object containing '") + key + "'");
  auto it = obj.find(key);
  if (it == obj.end()) Bad(std::string("missing field '") + key + "'");
  return *it;
}

IntVector ReadVector(const json& j, const std::string& what) {
  if (!j.is_array()) Bad(what + ": expected an array");
  IntVector out;
  for (const auto& v : j) out.push_back(ReadInt(v, what));
  return out;
}

std::vector<uint64_t> ReadUnsignedList(const json& j, const std::string& what) {
  if (!j.is_array()) Bad(what + ": expected an array");
  std::vector<uint64_t> out;
  for (const auto& v : j) out.push_back(ReadUnsigned(v, what));
  return out;
}

json VectorJson(const IntVector& v) {
  json out = json::array();
  for (int64_t x : v) out.push_back(std::to_string(x));
  return out;
}

json UnsignedJson(const std::vector<uint64_t>& v) {
  json out = json::array();
  for (uint64_t x : v) out.push_back(std::to_string(x));
  return out;
}

uint64_t Magnitude(int64_t v) {
  return v < 0 ? uint64_t{0} - static_cast<uint64_t>(v) : static_cast<uint64_t>(v);
}

}  // namespace

RunConfig ParseRunConfig(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    Bad(std::string("config is not valid JSON: ") + e.what());
  }
  try {
    RunConfig config;
    config.modulus = ReadUnsigned(Require(root, "q"), "q");
    const json& sys = Require(root, "system");
    const json& a = Require(sys, "A_hat");
    if (!a.is_array()) Bad("A_hat: expected an array of rows");
    for (const auto& row : a) config.system.a_hat.push_back(ReadVector(row, "A_hat row"));
    config.system.z_upper = ReadVector(Require(sys, "z_upper"), "z_upper");
    config.system.z_lower = ReadVector(Require(sys, "z_lower"), "z_lower");
    config.system.z_init = ReadVector(Require(sys, "z_init"), "z_init");
    config.system.num_steps = ReadUnsigned(Require(sys, "N"), "N");
    if (root.contains("mode")) {
      const json& m = root["mode"];
      if (m == "replay") {
        config.mode = TranscriptMode::kReplay;
      } else if (m == "fiat-shamir") {
        config.mode = TranscriptMode::kFiatShamir;
      } else {
        Bad("mode must be \"replay\" or \"fiat-shamir\"");
      }
    }
    if (root.contains("challenges")) {
      const json& ch = root["challenges"];
      InjectedChallenges injected;
      if (ch.contains("gammas")) injected.gammas = ReadUnsignedList(ch["gammas"], "gammas");
      if (ch.contains("betas")) injected.betas = ReadUnsignedList(ch["betas"], "betas");
      if (ch.contains("samples")) injected.samples = ReadUnsignedList(ch["samples"], "samples");
      config.challenges = std::move(injected);
    }
    if (root.contains("queries")) config.num_queries = ReadUnsigned(root["queries"], "queries");
    return config;
  } catch (const json::exception& e) {
    Bad(std::string("config structure: ") + e.what());
  }
}

std::string SerializeRunConfig(const RunConfig& config) {
  json a = json::array();
  for (const auto& row : config.system.a_hat) a.push_back(VectorJson(row));
  json out = {{"q", std::to_string(config.modulus)},
              {"system",
               {{"A_hat", std::move(a)},
                {"z_upper", VectorJson(config.system.z_upper)},
                {"z_lower", VectorJson(config.system.z_lower)},
                {"z_init", VectorJson(config.system.z_init)},
                {"N", std::to_string(config.system.num_steps)}}},
              {"mode", TranscriptModeName(config.mode)},
              {"queries", std::to_string(config.num_queries)}};
  if (config.challenges) {
    out["challenges"] = {{"gammas", UnsignedJson(config.challenges->gammas)},
                         {"betas", UnsignedJson(config.challenges->betas)},
                         {"samples", UnsignedJson(config.challenges->samples)}};
  }
  return out.dump(2) + "\n";
}

void ValidateRunConfig(const RunConfig& config) {
  const uint64_t q = config.modulus;
  if (q < 3) Bad("q must be an odd prime");
  if (q > kMaxConfigModulus) {
    Bad("q = " + std::to_string(q) + " exceeds the supported maximum " +
        std::to_string(kMaxConfigModulus));
  }
  const PrimeField field(q);  // kNotPrime
  const SystemSpec& spec = config.system;
  spec.Validate();
  const CyclicDomain domain = CyclicDomain::Build(field, spec.num_steps + 1);  // kNoSubgroup
  EvaluationDomain::LayerZero(domain);

  uint64_t bound = 0;
  for (const auto* v : {&spec.z_upper, &spec.z_lower, &spec.z_init}) {
    for (int64_t x : *v) bound = std::max(bound, Magnitude(x));
  }
  unsigned __int128 worst_row = 0;
  for (const auto& row : spec.a_hat) {
    unsigned __int128 s = 0;
    for (int64_t a : row) s += static_cast<unsigned __int128>(Magnitude(a)) * bound;
    worst_row = std::max(worst_row, s);
  }
  if (worst_row + bound >= q) {
    Bad("magnitudes too large for q = " + std::to_string(q) +
        ": |A_hat z| + max |bound| must stay below q");
  }
  if (config.num_queries < 1 || config.num_queries > kMaxQueries) {
    Bad("queries must be in [1, " + std::to_string(kMaxQueries) + "]");
  }
}

std::string SerializeTrace(const ExecutionTrace& trace) {
  json rows = json::array();
  for (size_t k = 0; k < trace.z_rows.size(); ++k) {
    json row = {{"k", std::to_string(k)}, {"z", VectorJson(trace.z_rows[k])}};
    if (k < trace.num_steps()) {
      row["alpha_up"] = VectorJson(trace.alpha_up_rows[k]);
      row["alpha_lo"] = VectorJson(trace.alpha_lo_rows[k]);
      row["delta"] = VectorJson(trace.delta_rows[k]);
    }
    rows.push_back(std::move(row));
  }
  return json{{"rows", std::move(rows)}}.dump(2) + "\n";
}

ExecutionTrace ParseTrace(const std::string& text, const SystemSpec& spec) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    Bad(std::string("trace is not valid JSON: ") + e.what());
  }
  ExecutionTrace trace;
  trace.spec = spec;
  try {
    const json& rows = Require(root, "rows");
    if (!rows.is_array() || rows.size() != spec.num_steps + 1) {
      Bad("trace must have N + 1 = " + std::to_string(spec.num_steps + 1) + " rows");
    }
    for (size_t k = 0; k < rows.size(); ++k) {
      const json& row = rows[k];
      const std::string where = "row " + std::to_string(k);
      if (row.contains("k") && ReadUnsigned(row["k"], where + " k") != k) {
        Bad(where + ": rows must be listed in order");
      }
      trace.z_rows.push_back(ReadVector(Require(row, "z"), where + " z"));
      if (k < spec.num_steps) {
        trace.alpha_up_rows.push_back(ReadVector(Require(row, "alpha_up"), where + " alpha_up"));
        trace.alpha_lo_rows.push_back(ReadVector(Require(row, "alpha_lo"), where + " alpha_lo"));
        trace.delta_rows.push_back(ReadVector(Require(row, "delta"), where + " delta"));
      }
    }
  } catch (const json::exception& e) {
    Bad(std::string("trace structure: ") + e.what());
  }
  try {
    trace.CheckShape();
  } catch (const Error& e) {
    Bad(std::string("trace shape: ") + e.what());
  }
  return trace;
}

void TamperTrace(ExecutionTrace& trace, size_t row, const std::string& column, int64_t value) {
  struct Column {
    const char* prefix;
    std::vector<IntVector>* rows;
  };
  const Column columns[] = {{"alpha_up", &trace.alpha_up_rows},
                            {"alpha_lo", &trace.alpha_lo_rows},
                            {"delta", &trace.delta_rows},
                            {"z", &trace.z_rows}};
  for (const auto& c : columns) {
    const std::string prefix = c.prefix;
    if (column.rfind(prefix, 0) != 0) continue;
    const std::string digits = column.substr(prefix.size());
    size_t coord = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), coord);
    if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size()) break;
    if (row >= c.rows->size()) {
      Bad("row " + std::to_string(row) + " is out of range for column " + column);
    }
    IntVector& r = (*c.rows)[row];
    if (coord < 1 || coord > r.size()) Bad("column " + column + " is out of range");
    r[coord - 1] = value;
    return;
  }
  Bad("unknown column '" + column + "'");
}

}  // namespace projstark
