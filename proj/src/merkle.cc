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

#include "projstark/merkle.h"

#include <openssl/evp.h>

#include <bit>

#include "projstark/errors.h"

namespace projstark {

Digest Sha256(std::span<const uint8_t> bytes) {
  Digest out{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
      len != out.size()) {
    throw std::runtime_error("EVP_Digest(SHA-256) failed");
  }
  return out;
}

std::string ToHex(const Digest& d) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(64);
  for (uint8_t b : d) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 15]);
  }
  return s;
}

Digest DigestFromHex(const std::string& hex) {
  if (hex.size() != 64) Throw(ErrorCode::kMalformedProof, "digest must be 64 hex digits");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    Throw(ErrorCode::kMalformedProof, "digest must be lowercase hex");
  };
  Digest d{};
  for (size_t i = 0; i < 32; ++i) {
    d[i] = static_cast<uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  }
  return d;
}

Digest HashLeaf(const FieldElement& value) {
  std::array<uint8_t, 9> buf{};
  buf[0] = 0x00;
  uint64_t v = value.value();
  for (size_t i = 0; i < 8; ++i) buf[1 + i] = static_cast<uint8_t>(v >> (8 * i));
  return Sha256(buf);
}

Digest HashNode(const Digest& left, const Digest& right) {
  std::array<uint8_t, 65> buf{};
  buf[0] = 0x01;
  std::copy(left.begin(), left.end(), buf.begin() + 1);
  std::copy(right.begin(), right.end(), buf.begin() + 33);
  return Sha256(buf);
}

MerkleTree::MerkleTree(std::span<const FieldElement> table) : leaf_count_(table.size()) {
  if (table.empty()) Throw(ErrorCode::kEmptyTable, "cannot commit to an empty table");
  const size_t width = std::bit_ceil(table.size());
  std::vector<Digest> leaves;
  leaves.reserve(width);
  for (const auto& v : table) leaves.push_back(HashLeaf(v));
  while (leaves.size() < width) leaves.push_back(leaves.back());
  levels_.push_back(std::move(leaves));
  while (levels_.back().size() > 1) {
    const auto& below = levels_.back();
    std::vector<Digest> above;
    above.reserve(below.size() / 2);
    for (size_t i = 0; i < below.size(); i += 2) above.push_back(HashNode(below[i], below[i + 1]));
    levels_.push_back(std::move(above));
  }
}

MerklePath MerkleTree::Open(size_t index) const {
  if (index >= leaf_count_) {
    Throw(ErrorCode::kIndexOutOfRange, "opening index " + std::to_string(index) +
                                           " >= leaf count " + std::to_string(leaf_count_));
  }
  MerklePath path;
  for (size_t level = 0; level + 1 < levels_.size(); ++level) {
    path.siblings.push_back(levels_[level][index ^ 1]);
    index >>= 1;
  }
  return path;
}

bool VerifyOpening(const MerkleCommitment& commitment, size_t index, const FieldElement& value,
                   const MerklePath& path) {
  if (index >= commitment.leaf_count) {
    Throw(ErrorCode::kIndexOutOfRange, "opening index " + std::to_string(index) +
                                           " >= leaf count " +
                                           std::to_string(commitment.leaf_count));
  }
  const size_t depth = std::bit_width(std::bit_ceil(commitment.leaf_count)) - 1;
  if (path.siblings.size() != depth) return false;
  Digest acc = HashLeaf(value);
  for (const Digest& sibling : path.siblings) {
    acc = (index & 1) ? HashNode(sibling, acc) : HashNode(acc, sibling);
    index >>= 1;
  }
  return acc == commitment.root;
}

}  // namespace projstark
