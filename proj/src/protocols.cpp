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

#include "hecc/protocols.hpp"

#include <openssl/evp.h>

#include <array>

#include "hecc/codec.hpp"

namespace hecc {

namespace {

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(std::span<const std::uint8_t> data) {
  Digest out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 || len != out.size()) {
    throw Error("SHA-256 computation failed");
  }
  return out;
}

void require_scalar_range(const DomainParams& dp) {
  if (dp.order() < 3) throw ParameterError("group order too small: no scalars in [1, r-1] besides 1");
}

void require_peer(const MumfordDivisor& peer, const DomainParams& dp) {
  const Jacobian& jac = dp.jacobian();
  if (!jac.contains(peer)) throw InvalidPeerError("peer element is not a reduced divisor on the curve");
  if (!jac.multiply(dp.order(), peer).is_identity()) {
    throw InvalidPeerError("peer element does not lie in the order-r subgroup");
  }
}

}  // namespace

KeyPair keygen(const DomainParams& dp, ScalarSource& rng) {
  require_scalar_range(dp);
  BigInt a = rng.draw(1, dp.order() - 1);
  MumfordDivisor pub = dp.jacobian().multiply(a, dp.base());
  return {std::move(a), std::move(pub)};
}

KeyPair keypair_from_secret(const DomainParams& dp, const BigInt& secret) {
  if (secret < 1 || secret >= dp.order()) throw ParameterError("secret scalar outside [1, r-1]");
  return {secret, dp.jacobian().multiply(secret, dp.base())};
}

SharedSecret dh_shared(const KeyPair& own, const MumfordDivisor& peer_public, const DomainParams& dp) {
  require_peer(peer_public, dp);
  return {dp.jacobian().multiply(own.secret, peer_public), peer_public.is_identity()};
}

CipherBlock elgamal_encrypt(const MumfordDivisor& message, const MumfordDivisor& peer_public,
                            const DomainParams& dp, ScalarSource& rng) {
  require_scalar_range(dp);
  const Jacobian& jac = dp.jacobian();
  jac.require_member(message, "message");
  jac.require_member(peer_public, "public key");
  const BigInt a = rng.draw(1, dp.order() - 1);
  return {jac.multiply(a, dp.base()), jac.add(message, jac.multiply(a, peer_public))};
}

MumfordDivisor elgamal_decrypt(const CipherBlock& block, const KeyPair& own, const DomainParams& dp) {
  const Jacobian& jac = dp.jacobian();
  if (!jac.contains(block.c1) || !jac.contains(block.c2)) {
    throw InvalidCiphertextError("ciphertext component is not a reduced divisor on the curve");
  }
  return jac.subtract(block.c2, jac.multiply(own.secret, block.c1));
}

std::size_t message_block_size(const CurveParams& curve) {
  const std::size_t bits = curve.field()->bits();
  if (bits < 32) throw ParameterError("message embedding needs a prime of at least 32 bits");
  return curve.field()->byte_width() - 3;
}

MumfordDivisor encode_message_block(std::span<const std::uint8_t> block, const CurveParams& curve) {
  if (block.size() > message_block_size(curve)) throw ParameterError("message block too long");
  const PrimeField& F = *curve.field();
  const BigInt base = from_bytes_be(block) << kEmbeddingCounterBits;
  const BigInt inv2 = F.inv(2);
  for (unsigned long j = 0; j < (1ul << kEmbeddingCounterBits); ++j) {
    const BigInt x = base + j;
    const BigInt hx = evaluate(curve.h(), x);
    const BigInt disc = F.add(F.mul(hx, hx), F.mul(4, evaluate(curve.f(), x)));
    const auto root = F.sqrt(disc);
    if (!root) continue;
    const BigInt y = F.mul(F.sub(*root, hx), inv2);
    const BigField& field = curve.model().field;
    return {Polynomial::linear_root(field, x), Polynomial::constant(field, y)};
  }
  throw EncodingError("no curve point found for message block within 2^16 tries");
}

Bytes decode_message_block(const MumfordDivisor& d, const CurveParams& curve, std::size_t length) {
  if (d.u.degree() != 1) throw FormatError("message divisor must have weight one");
  const BigInt x = curve.field()->neg(d.u.coefficient(0));
  const BigInt value = x >> kEmbeddingCounterBits;
  if (bit_length(value) > 8 * length) throw FormatError("message divisor does not fit the block length");
  return to_bytes_be(value, length);
}

Ciphertext elgamal_encrypt_bytes(std::span<const std::uint8_t> message, const MumfordDivisor& peer_public,
                                 const DomainParams& dp, ScalarSource& rng) {
  require_scalar_range(dp);
  require_peer(peer_public, dp);
  const std::size_t block = message_block_size(dp.curve());
  const Jacobian& jac = dp.jacobian();

  Ciphertext ct;
  ct.plaintext_length = message.size();
  if (message.empty()) return ct;

  const std::size_t bits = bit_length(dp.order());
  const FixedBaseMultiplier base_table(jac, dp.base(), bits);
  const FixedBaseMultiplier peer_table(jac, peer_public, bits);
  ct.chunks.reserve((message.size() + block - 1) / block);
  for (std::size_t off = 0; off < message.size(); off += block) {
    const auto chunk = message.subspan(off, std::min(block, message.size() - off));
    const MumfordDivisor m = encode_message_block(chunk, dp.curve());
    const BigInt a = rng.draw(1, dp.order() - 1);
    ct.chunks.push_back({base_table.multiply(a), jac.add(m, peer_table.multiply(a))});
  }
  return ct;
}

Bytes elgamal_decrypt_bytes(const Ciphertext& ct, const KeyPair& own, const DomainParams& dp) {
  const std::size_t block = message_block_size(dp.curve());
  const std::uint64_t expected_chunks = (ct.plaintext_length + block - 1) / block;
  if (ct.chunks.size() != expected_chunks) {
    throw InvalidCiphertextError("chunk count does not match the plaintext length");
  }
  Bytes out;
  out.reserve(ct.plaintext_length);
  std::uint64_t left = ct.plaintext_length;
  for (const CipherBlock& cb : ct.chunks) {
    const std::size_t len = static_cast<std::size_t>(std::min<std::uint64_t>(block, left));
    const MumfordDivisor m = elgamal_decrypt(cb, own, dp);
    Bytes piece;
    try {
      piece = decode_message_block(m, dp.curve(), len);
    } catch (const FormatError& e) {
      throw DecryptionError(std::string("decrypted block is not a message: ") + e.what());
    }
    out.insert(out.end(), piece.begin(), piece.end());
    left -= len;
  }
  return out;
}

BigInt hash_to_int(std::span<const std::uint8_t> message) {
  const Digest d = sha256(message);
  return from_bytes_be(std::span(d).first(20));
}

BigInt phi(const MumfordDivisor& d, const DomainParams& dp) {
  if (d.is_identity()) return 0;
  return mod(from_bytes_be(codec::encode_divisor(d)), dp.order());
}

BigInt derive_nonce(const BigInt& secret, std::span<const std::uint8_t> message, const DomainParams& dp,
                    std::uint32_t counter) {
  require_scalar_range(dp);
  codec::ByteWriter w;
  w.put(codec::encode_scalar(secret, dp));
  w.put(sha256(message));
  if (counter != 0) w.put_u32(counter);
  const Digest d = sha256(std::move(w).take());
  return 1 + mod(from_bytes_be(d), dp.order() - 1);
}

namespace {

template <class NextNonce>
Signature sign_with(std::span<const std::uint8_t> message, const KeyPair& own, const DomainParams& dp,
                    NextNonce&& next_nonce) {
  require_scalar_range(dp);
  const BigInt& r = dp.order();
  if (own.secret < 1 || own.secret >= r) throw ParameterError("secret scalar outside [1, r-1]");
  const BigInt e = hash_to_int(message);
  for (std::uint32_t attempt = 0;; ++attempt) {
    const BigInt k = next_nonce(attempt);
    MumfordDivisor q = dp.jacobian().multiply(k, dp.base());
    const BigInt t = phi(q, dp);
    if (sgn(t) == 0) continue;
    BigInt s = mod(inverse_mod(k, r) * (e + own.secret * t), r);
    if (sgn(s) == 0) continue;
    return {std::move(q), std::move(s)};
  }
}

}  // namespace

Signature sign(std::span<const std::uint8_t> message, const KeyPair& own, const DomainParams& dp) {
  return sign_with(message, own, dp,
                   [&](std::uint32_t attempt) { return derive_nonce(own.secret, message, dp, attempt); });
}

Signature sign(std::span<const std::uint8_t> message, const KeyPair& own, const DomainParams& dp,
               ScalarSource& nonces) {
  return sign_with(message, own, dp, [&](std::uint32_t) { return nonces.draw(1, dp.order() - 1); });
}

std::string_view status_name(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::accepted: return "accepted";
    case VerifyStatus::bad_public_key: return "public key is not a valid divisor";
    case VerifyStatus::bad_commitment: return "commitment Q is not a valid divisor";
    case VerifyStatus::identity_commitment: return "commitment Q is the identity";
    case VerifyStatus::scalar_out_of_range: return "s outside [1, r-1]";
    case VerifyStatus::mismatch: return "V != Q";
  }
  return "unknown";
}

VerifyResult verify(std::span<const std::uint8_t> message, const Signature& sig,
                    const MumfordDivisor& signer_public, const DomainParams& dp) {
  const Jacobian& jac = dp.jacobian();
  const BigInt& r = dp.order();
  if (!jac.contains(signer_public) || signer_public.is_identity() ||
      !jac.multiply(r, signer_public).is_identity()) {
    return {VerifyStatus::bad_public_key};
  }
  if (!jac.contains(sig.commitment)) return {VerifyStatus::bad_commitment};
  if (sig.commitment.is_identity()) return {VerifyStatus::identity_commitment};
  if (sig.s < 1 || sig.s >= r) return {VerifyStatus::scalar_out_of_range};

  const BigInt w = inverse_mod(sig.s, r);
  const BigInt v1 = mod(w * hash_to_int(message), r);
  const BigInt v2 = mod(w * phi(sig.commitment, dp), r);
  const MumfordDivisor v = jac.add(jac.multiply(v1, dp.base()), jac.multiply(v2, signer_public));
  return {v == sig.commitment ? VerifyStatus::accepted : VerifyStatus::mismatch};
}

}  // namespace hecc
