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

#include <gtest/gtest.h>

#include <set>

#include "hecc/codec.hpp"
#include "hecc/oracle.hpp"
#include "hecc/protocols.hpp"
#include "support.hpp"

namespace hecc {
namespace {

using testing::Gen;

class ProtocolTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    toy_ = new DomainParams(testing::toy_domain());
    demo_ = new DomainParams(testing::demo_domain());
  }
  static void TearDownTestSuite() {
    delete toy_;
    delete demo_;
  }
  static const DomainParams& toy() { return *toy_; }
  static const DomainParams& demo() { return *demo_; }

 private:
  static inline DomainParams* toy_ = nullptr;
  static inline DomainParams* demo_ = nullptr;
};

TEST_F(ProtocolTest, KeygenPinned) {
  const DomainParams& dp = toy();
  ScriptedScalarSource one({1});
  EXPECT_EQ(keygen(dp, one).public_key, dp.base());
  ScriptedScalarSource last({dp.order() - 1});
  EXPECT_EQ(keygen(dp, last).public_key, dp.jacobian().negate(dp.base()));
}

TEST_F(ProtocolTest, KeygenRequiresUsefulOrder) {
  const auto group = oracle::enumerate_reduced_divisors(testing::curve(7, {3, 0, 0, 0, 0, 1}));
  const DomainParams tiny = oracle::make_prime_order_domain(group);  // #J = 50, r = 5
  ASSERT_EQ(tiny.order(), 5);
  SystemScalarSource rng;
  EXPECT_NO_THROW(keygen(tiny, rng));

  // r = 2 leaves no scalar besides 1.
  const Jacobian& jac = tiny.jacobian();
  for (const MumfordDivisor& d : group.elements()) {
    const MumfordDivisor half = jac.multiply(25, d);
    if (half.is_identity()) continue;
    const DomainParams two(group.curve(), half, 2);
    EXPECT_THROW(keygen(two, rng), ParameterError);
    break;
  }
}

TEST_F(ProtocolTest, KeypairsOnToyDomain) {
  const DomainParams& dp = toy();
  Gen gen(20);
  for (int i = 0; i < 100; ++i) {
    const KeyPair kp = keygen(dp, gen.source());
    ASSERT_GE(kp.secret, 1);
    ASSERT_LT(kp.secret, dp.order());
    // Recompute by repeated addition.
    MumfordDivisor acc = dp.jacobian().identity();
    for (BigInt k = 0; k < kp.secret; ++k) acc = dp.jacobian().add(acc, dp.base());
    ASSERT_EQ(acc, kp.public_key);
  }
}

TEST_F(ProtocolTest, DiffieHellman) {
  const DomainParams& dp = toy();
  const KeyPair a = keypair_from_secret(dp, 2), b = keypair_from_secret(dp, 3);
  const SharedSecret sa = dh_shared(a, b.public_key, dp), sb = dh_shared(b, a.public_key, dp);
  EXPECT_EQ(sa.value, sb.value);
  EXPECT_EQ(sa.value, dp.jacobian().multiply(6, dp.base()));
  EXPECT_FALSE(sa.degenerate);

  const SharedSecret deg = dh_shared(a, dp.jacobian().identity(), dp);
  EXPECT_TRUE(deg.degenerate);
  EXPECT_TRUE(deg.value.is_identity());

  const MumfordDivisor bogus = testing::mumford(dp.curve(), {0, 1}, {1});
  ASSERT_FALSE(dp.jacobian().contains(bogus));
  EXPECT_THROW(dh_shared(a, bogus, dp), InvalidPeerError);
}

TEST_F(ProtocolTest, DiffieHellmanRejectsWrongSubgroup) {
  // On the demo curve #J = 10 r; an element of order 2, 5 or 10 is outside <R>.
  const DomainParams& dp = demo();
  const Jacobian& jac = dp.jacobian();
  Gen gen(21);
  MumfordDivisor small = jac.identity();
  while (small.is_identity()) small = jac.multiply(dp.order(), gen.element(jac));
  const KeyPair a = keypair_from_secret(dp, 5);
  EXPECT_THROW(dh_shared(a, small, dp), InvalidPeerError);
}

TEST_F(ProtocolTest, DiffieHellmanSymmetry) {
  Gen gen(22);
  for (const DomainParams* dp : {&toy(), &demo()}) {
    for (int i = 0; i < 100; ++i) {
      const KeyPair a = keygen(*dp, gen.source()), b = keygen(*dp, gen.source());
      ASSERT_EQ(dh_shared(a, b.public_key, *dp).value, dh_shared(b, a.public_key, *dp).value);
    }
  }
}

TEST_F(ProtocolTest, ElGamalDivisorLevel) {
  const DomainParams& dp = toy();
  const Jacobian& jac = dp.jacobian();
  const KeyPair bob = keypair_from_secret(dp, 1234);
  Gen gen(23);
  const MumfordDivisor m = gen.element(jac);

  ScriptedScalarSource one({1});
  const CipherBlock unit = elgamal_encrypt(m, bob.public_key, dp, one);
  EXPECT_EQ(unit.c1, dp.base());
  EXPECT_EQ(unit.c2, jac.add(m, bob.public_key));

  ScriptedScalarSource pinned({77});
  const CipherBlock id = elgamal_encrypt(jac.identity(), bob.public_key, dp, pinned);
  EXPECT_EQ(id.c2, jac.multiply(77, bob.public_key));

  EXPECT_EQ(elgamal_decrypt({jac.identity(), m}, bob, dp), m);

  for (int i = 0; i < 1000; ++i) {
    const MumfordDivisor msg = gen.element(jac);
    const KeyPair k = keygen(dp, gen.source());
    const CipherBlock ct = elgamal_encrypt(msg, k.public_key, dp, gen.source());
    ASSERT_EQ(elgamal_decrypt(ct, k, dp), msg);
  }

  const CipherBlock good = elgamal_encrypt(m, bob.public_key, dp, gen.source());
  const MumfordDivisor bad = testing::mumford(dp.curve(), {0, 1}, {1});
  EXPECT_THROW(elgamal_decrypt({good.c1, bad}, bob, dp), InvalidCiphertextError);
  EXPECT_THROW(elgamal_encrypt(bad, bob.public_key, dp, gen.source()), InvalidDivisorError);
}

TEST_F(ProtocolTest, ElGamalTamperedC2) {
  const DomainParams& dp = demo();
  const Jacobian& jac = dp.jacobian();
  const KeyPair bob = keypair_from_secret(dp, 987654321);
  Gen gen(24);
  for (int i = 0; i < 50; ++i) {
    const MumfordDivisor m = gen.element(jac);
    const CipherBlock ct = elgamal_encrypt(m, bob.public_key, dp, gen.source());

    // A bit flip either fails to decode or decrypts to something else.
    Bytes b = codec::encode_divisor(ct.c2);
    b[gen.below(b.size())] ^= static_cast<std::uint8_t>(1u << gen.below(8));
    try {
      CipherBlock flipped = ct;
      flipped.c2 = codec::decode_divisor(b, dp.curve());
      ASSERT_NE(elgamal_decrypt(flipped, bob, dp), m);
    } catch (const FormatError&) {
    }

    // Shifting C2 by T shifts the plaintext by T.
    const MumfordDivisor t = gen.element(jac);
    if (t.is_identity()) continue;
    CipherBlock shifted = ct;
    shifted.c2 = jac.add(ct.c2, t);
    ASSERT_EQ(elgamal_decrypt(shifted, bob, dp), jac.add(m, t));
  }
}

TEST_F(ProtocolTest, ElGamalFreshEphemerals) {
  const DomainParams& dp = demo();
  const KeyPair bob = keypair_from_secret(dp, 42);
  SystemScalarSource rng;
  const MumfordDivisor m = dp.base();
  EXPECT_NE(elgamal_encrypt(m, bob.public_key, dp, rng).c1, elgamal_encrypt(m, bob.public_key, dp, rng).c1);
}

TEST_F(ProtocolTest, MessageEmbedding) {
  const DomainParams& dp = demo();
  const CurveParams& c = dp.curve();
  ASSERT_EQ(message_block_size(c), 5u);
  EXPECT_THROW(message_block_size(toy().curve()), ParameterError);

  // Block 0: x is the least admissible j, found here by a direct residue scan.
  const MumfordDivisor zero = encode_message_block(Bytes{}, c);
  const FieldPtr& F = c.field();
  long j = 0;
  for (;; ++j) {
    const FieldElement x(F, j);
    if (evaluate(c.f(), x).legendre() >= 0) break;
  }
  EXPECT_EQ(zero.u, Polynomial::linear_root(BigField(F), BigInt(j)));
  EXPECT_TRUE(dp.jacobian().contains(zero));

  Gen gen(25);
  std::uint64_t worst = 0;
  for (int i = 0; i < 10000; ++i) {
    const Bytes block = gen.bytes(5);
    const MumfordDivisor d = encode_message_block(block, c);
    ASSERT_EQ(decode_message_block(d, c, 5), block);
    const BigInt x = F->neg(d.u.coefficient(0));
    worst = std::max<std::uint64_t>(worst, to_u64(x & 0xffff));
  }
  EXPECT_LT(worst, 100u);

  EXPECT_THROW(encode_message_block(gen.bytes(6), c), ParameterError);
  EXPECT_THROW(decode_message_block(dp.jacobian().add(dp.base(), dp.base()), c, 5), FormatError);
}

TEST_F(ProtocolTest, ElGamalBytes) {
  const DomainParams& dp = demo();
  const KeyPair bob = keypair_from_secret(dp, BigInt("31415926535897932384626433832795028841"));
  Gen gen(26);
  for (std::size_t n : {0u, 1u, 4u, 5u, 6u, 10u, 1000u}) {
    const Bytes msg = gen.bytes(n);
    const Ciphertext ct = elgamal_encrypt_bytes(msg, bob.public_key, dp, gen.source());
    EXPECT_EQ(ct.chunks.size(), (n + 4) / 5);
    EXPECT_EQ(ct.plaintext_length, n);
    EXPECT_EQ(elgamal_decrypt_bytes(ct, bob, dp), msg);
  }

  // Wrong key: every block decodes to garbage or fails to decode at all.
  const Bytes msg = gen.bytes(200);
  const Ciphertext ct = elgamal_encrypt_bytes(msg, bob.public_key, dp, gen.source());
  const KeyPair eve = keypair_from_secret(dp, 2);
  try {
    EXPECT_NE(elgamal_decrypt_bytes(ct, eve, dp), msg);
  } catch (const DecryptionError&) {
  }

  Ciphertext shortened = ct;
  shortened.chunks.pop_back();
  EXPECT_THROW(elgamal_decrypt_bytes(shortened, bob, dp), InvalidCiphertextError);
}

TEST_F(ProtocolTest, HashToInt) {
  // Leftmost 160 bits of SHA-256("").
  EXPECT_EQ(to_hex(to_bytes_be(hash_to_int({}), 20)), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4");
  // SHA-256("abc") = ba7816bf 8f01cfea 414140de 5dae2223 b00361a3 96177a9c ...
  EXPECT_EQ(to_hex(to_bytes_be(hash_to_int(as_bytes("abc")), 20)), "ba7816bf8f01cfea414140de5dae2223b00361a3");
  Gen gen(27);
  std::set<BigInt> seen;
  for (int i = 0; i < 10000; ++i) {
    const Bytes m = gen.bytes(1 + gen.below(40));
    const BigInt h = hash_to_int(m);
    ASSERT_LT(h, BigInt(1) << 160);
    seen.insert(h);
  }
  EXPECT_GT(seen.size(), 9900u);  // distinct random inputs, duplicates only from equal inputs
}

TEST_F(ProtocolTest, Phi) {
  const DomainParams& dp = toy();
  EXPECT_EQ(phi(dp.jacobian().identity(), dp), 0);
  EXPECT_EQ(phi(dp.base(), dp), mod(from_bytes_be(codec::encode_divisor(dp.base())), dp.order()));

  const auto group = oracle::enumerate_reduced_divisors(dp.curve());
  std::set<BigInt> images;
  for (const MumfordDivisor& d : group.elements()) {
    const BigInt v = phi(d, dp);
    ASSERT_LT(v, dp.order());
    images.insert(v);
  }
  const std::size_t collisions = group.order() - images.size();
  ::testing::Test::RecordProperty("phi_collisions", static_cast<int>(collisions));
  // 3361 elements into 3361 residues: collisions are expected at toy size.
  EXPECT_LT(collisions, group.order());
}

TEST_F(ProtocolTest, SignVerify) {
  const DomainParams& dp = demo();
  const KeyPair kp = keypair_from_secret(dp, BigInt("27182818284590452353602874713526624977"));
  const Bytes m(as_bytes("transfer 100 units").begin(), as_bytes("transfer 100 units").end());
  const Signature s1 = sign(m, kp, dp), s2 = sign(m, kp, dp);
  EXPECT_EQ(s1, s2);
  EXPECT_TRUE(verify(m, s1, kp.public_key, dp).accepted());

  Bytes flipped = m;
  flipped[0] ^= 1;
  EXPECT_EQ(verify(flipped, s1, kp.public_key, dp).status, VerifyStatus::mismatch);

  Signature neg = s1;
  neg.s = dp.order() - s1.s;
  EXPECT_FALSE(verify(m, neg, kp.public_key, dp).accepted());

  Signature zero = s1;
  zero.s = 0;
  EXPECT_EQ(verify(m, zero, kp.public_key, dp).status, VerifyStatus::scalar_out_of_range);

  Signature ident = s1;
  ident.commitment = dp.jacobian().identity();
  EXPECT_EQ(verify(m, ident, kp.public_key, dp).status, VerifyStatus::identity_commitment);

  Signature offcurve = s1;
  offcurve.commitment = testing::mumford(dp.curve(), {0, 1}, {5});
  EXPECT_EQ(verify(m, offcurve, kp.public_key, dp).status, VerifyStatus::bad_commitment);

  EXPECT_EQ(verify(m, s1, dp.jacobian().identity(), dp).status, VerifyStatus::bad_public_key);
  EXPECT_EQ(status_name(VerifyStatus::accepted), "accepted");
}

TEST_F(ProtocolTest, SignatureRandomizedMode) {
  const DomainParams& dp = demo();
  const KeyPair kp = keypair_from_secret(dp, 99);
  SystemScalarSource rng;
  const Signature a = sign(as_bytes("m"), kp, dp, rng), b = sign(as_bytes("m"), kp, dp, rng);
  EXPECT_NE(a, b);
  EXPECT_TRUE(verify(as_bytes("m"), a, kp.public_key, dp).accepted());
  EXPECT_TRUE(verify(as_bytes("m"), b, kp.public_key, dp).accepted());
}

TEST_F(ProtocolTest, DeterministicNonce) {
  const DomainParams& dp = demo();
  const BigInt k = derive_nonce(5, as_bytes("m"), dp);
  EXPECT_GE(k, 1);
  EXPECT_LT(k, dp.order());
  EXPECT_EQ(k, derive_nonce(5, as_bytes("m"), dp));
  EXPECT_NE(k, derive_nonce(5, as_bytes("n"), dp));
  EXPECT_NE(k, derive_nonce(6, as_bytes("m"), dp));
  EXPECT_NE(k, derive_nonce(5, as_bytes("m"), dp, 1));
}

// A scripted source pins k.
TEST_F(ProtocolTest, ScriptedNonceIsUsed) {
  const DomainParams& dp = toy();
  const KeyPair kp = keypair_from_secret(dp, 10);
  ScriptedScalarSource k({BigInt(5)});
  const Signature s = sign(as_bytes("abc"), kp, dp, k);
  EXPECT_EQ(s.commitment, dp.jacobian().multiply(5, dp.base()));
  EXPECT_EQ(k.remaining(), 0u);
}

TEST_F(ProtocolTest, NonceReuseLeaksSecret) {
  const DomainParams& dp = demo();
  const BigInt& r = dp.order();
  const KeyPair kp = keypair_from_secret(dp, BigInt("123456789012345678901234567890"));
  ScriptedScalarSource k({BigInt(424242), BigInt(424242)});
  const Signature s1 = sign(as_bytes("first"), kp, dp, k), s2 = sign(as_bytes("second"), kp, dp, k);
  ASSERT_EQ(s1.commitment, s2.commitment);
  // s_i k = H_i + a phi  =>  k = (H1 - H2) / (s1 - s2),  a = (s1 k - H1) / phi.
  const BigInt h1 = hash_to_int(as_bytes("first")), h2 = hash_to_int(as_bytes("second"));
  const BigInt kk = mod((h1 - h2) * inverse_mod(mod(s1.s - s2.s, r), r), r);
  const BigInt a = mod((s1.s * kk - h1) * inverse_mod(phi(s1.commitment, dp), r), r);
  EXPECT_EQ(kk, 424242);
  EXPECT_EQ(a, kp.secret);
}

TEST_F(ProtocolTest, SignatureSoundness) {
  const DomainParams& dp = toy();
  Gen gen(28);
  std::size_t trials = 0;
  for (int i = 0; i < 300; ++i) {
    const KeyPair kp = keygen(dp, gen.source());
    const Bytes m = gen.bytes(16);
    const Signature sig = sign(m, kp, dp);
    ASSERT_TRUE(verify(m, sig, kp.public_key, dp).accepted());
    Bytes m2 = m;
    m2[gen.below(m2.size())] ^= static_cast<std::uint8_t>(1u << gen.below(8));
    // r = 3361: a flipped message collides with probability about 1/r.
    if (hash_to_int(m2) % dp.order() != hash_to_int(m) % dp.order()) {
      ASSERT_FALSE(verify(m2, sig, kp.public_key, dp).accepted());
      ++trials;
    }
  }
  EXPECT_GT(trials, 290u);
}

}  // namespace
}  // namespace hecc
