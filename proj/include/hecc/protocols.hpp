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

// Discrete-log protocols over the Jacobian of a hyperelliptic curve:
// Diffie-Hellman key agreement, ElGamal encryption and DSA-style signatures.
//
// Every scalar drawn from a ScalarSource lies in [1, r-1]. Signatures carry
// the full commitment divisor Q, not just phi(Q).

#ifndef HECC_PROTOCOLS_HPP
#define HECC_PROTOCOLS_HPP

#include <span>
#include <string_view>

#include "hecc/artifacts.hpp"
#include "hecc/domain.hpp"
#include "hecc/random.hpp"

namespace hecc {

/// Throws ParameterError when r < 3.
KeyPair keygen(const DomainParams& dp, ScalarSource& rng);

/// Rebuilds the key pair for a stored secret; rejects a outside [1, r-1].
KeyPair keypair_from_secret(const DomainParams& dp, const BigInt& secret);

/// S = a * peer. The peer element must be a member of the Jacobian and be
/// killed by r, otherwise InvalidPeerError.
SharedSecret dh_shared(const KeyPair& own, const MumfordDivisor& peer_public, const DomainParams& dp);

/// c1 = aR, c2 = M + aQ with a fresh ephemeral a.
CipherBlock elgamal_encrypt(const MumfordDivisor& message, const MumfordDivisor& peer_public,
                            const DomainParams& dp, ScalarSource& rng);
/// M = c2 - b c1. Throws InvalidCiphertextError for non-members.
MumfordDivisor elgamal_decrypt(const CipherBlock& block, const KeyPair& own, const DomainParams& dp);

// Byte blocks are embedded as the x-coordinate x = block * 2^16 + j of a
// weight-one divisor, j being the least counter for which the curve has a
// point above x.

inline constexpr unsigned kEmbeddingCounterBits = 16;

/// Block capacity in bytes: ceil(bits(p)/8) - 3. Requires bits(p) >= 32.
std::size_t message_block_size(const CurveParams& curve);

MumfordDivisor encode_message_block(std::span<const std::uint8_t> block, const CurveParams& curve);
/// Inverse of encode_message_block; `length` is the original block length.
/// Throws FormatError for divisors that are not embedded blocks.
Bytes decode_message_block(const MumfordDivisor& d, const CurveParams& curve, std::size_t length);

/// Splits the message into blocks and encrypts each with its own ephemeral
/// scalar.
Ciphertext elgamal_encrypt_bytes(std::span<const std::uint8_t> message, const MumfordDivisor& peer_public,
                                 const DomainParams& dp, ScalarSource& rng);
/// Throws InvalidCiphertextError for structurally broken input and
/// DecryptionError when a block does not decode (typically a wrong key).
Bytes elgamal_decrypt_bytes(const Ciphertext& ct, const KeyPair& own, const DomainParams& dp);

/// Leftmost 160 bits of SHA-256(m) as a big-endian integer.
BigInt hash_to_int(std::span<const std::uint8_t> message);

/// Canonical divisor encoding read as a big-endian integer, reduced mod r;
/// the identity maps to 0.
BigInt phi(const MumfordDivisor& d, const DomainParams& dp);

/// Deterministic nonce: k = 1 + (SHA-256(enc(a) || SHA-256(m) [|| counter]) mod (r-1)).
/// The counter suffix (4 bytes, big-endian) is only appended on retries.
BigInt derive_nonce(const BigInt& secret, std::span<const std::uint8_t> message, const DomainParams& dp,
                    std::uint32_t counter = 0);

/// Signs with the deterministic nonce.
Signature sign(std::span<const std::uint8_t> message, const KeyPair& own, const DomainParams& dp);
/// Signs with nonces drawn from `nonces`; a scripted source pins k.
Signature sign(std::span<const std::uint8_t> message, const KeyPair& own, const DomainParams& dp,
               ScalarSource& nonces);

enum class VerifyStatus {
  accepted,
  bad_public_key,
  bad_commitment,
  identity_commitment,
  scalar_out_of_range,
  mismatch,
};

std::string_view status_name(VerifyStatus status);

struct VerifyResult {
  VerifyStatus status;
  bool accepted() const noexcept { return status == VerifyStatus::accepted; }
};

/// Accepts iff s^-1 H(m) R + s^-1 phi(Q) P equals Q; never throws on bad input.
VerifyResult verify(std::span<const std::uint8_t> message, const Signature& sig,
                    const MumfordDivisor& signer_public, const DomainParams& dp);

/// Byte view of a string, for messages.
inline std::span<const std::uint8_t> as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace hecc

#endif  // HECC_PROTOCOLS_HPP
