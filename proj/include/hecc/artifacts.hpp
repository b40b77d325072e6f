// Copyright 2026 The hecc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HECC_ARTIFACTS_HPP
#define HECC_ARTIFACTS_HPP

#include <cstdint>
#include <vector>

#include "hecc/jacobian.hpp"

namespace hecc {

/// Secret scalar a in [1, r-1] and public divisor a * R.
struct KeyPair {
  BigInt secret;
  MumfordDivisor public_key;
};

/// One ElGamal pair: c1 = a R, c2 = M + a Q.
struct CipherBlock {
  MumfordDivisor c1;
  MumfordDivisor c2;

  friend bool operator==(const CipherBlock&, const CipherBlock&) = default;
};

/// Byte-message ciphertext: one block per message chunk.
struct Ciphertext {
  std::vector<CipherBlock> chunks;
  std::uint64_t plaintext_length = 0;

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

/// (Q, s); the signed message travels separately.
struct Signature {
  MumfordDivisor commitment;
  BigInt s;

  friend bool operator==(const Signature&, const Signature&) = default;
};

struct SharedSecret {
  MumfordDivisor value;
  /// The peer sent the identity, so the secret is the identity too.
  bool degenerate = false;
};

}  // namespace hecc

#endif  // HECC_ARTIFACTS_HPP
