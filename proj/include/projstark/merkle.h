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

#ifndef PROJSTARK_MERKLE_H_
#define PROJSTARK_MERKLE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "projstark/field.h"

namespace projstark {

using Digest = std::array<uint8_t, 32>;

Digest Sha256(std::span<const uint8_t> bytes);
std::string ToHex(const Digest& d);
// Throws kMalformedProof on anything but 64 hex digits.
Digest DigestFromHex(const std::string& hex);

// SHA-256(0x00 || le64(value)).
Digest HashLeaf(const FieldElement& value);
// SHA-256(0x01 || left || right).
Digest HashNode(const Digest& left, const Digest& right);

struct MerkleCommitment {
  Digest root;
  size_t leaf_count;
};

// Sibling digests from the leaf level up to (not including) the root.
struct MerklePath {
  std::vector<Digest> siblings;
};

// Binary tree over an ordered table; the leaf level is padded to a power of
// two by repeating the last leaf. A single leaf is its own root.
class MerkleTree {
 public:
  // Throws kEmptyTable.
  explicit MerkleTree(std::span<const FieldElement> table);

  MerkleCommitment commitment() const { return {levels_.back().front(), leaf_count_}; }
  const Digest& root() const { return levels_.back().front(); }
  size_t leaf_count() const { return leaf_count_; }
  // Throws kIndexOutOfRange.
  MerklePath Open(size_t index) const;

 private:
  size_t leaf_count_;
  std::vector<std::vector<Digest>> levels_;  // levels_[0] is the padded leaf level
};

// Recomputes the root from value and path. Throws kIndexOutOfRange if
// index >= leaf_count; a path of the wrong length is a plain rejection.
bool VerifyOpening(const MerkleCommitment& commitment, size_t index, const FieldElement& value,
                   const MerklePath& path);

}  // namespace projstark

#endif  // PROJSTARK_MERKLE_H_
