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

#include "hecc/field.hpp"
#include "support.hpp"

namespace hecc {
namespace {

using testing::Gen;

FieldPtr F7() { return PrimeField::create(7); }

FieldElement e7(long v) { return FieldElement(F7(), v); }

TEST(FieldTest, Arithmetic) {
  EXPECT_EQ((e7(5) + e7(4)).value(), 2);
  EXPECT_EQ((e7(0) - e7(1)).value(), 6);
  EXPECT_EQ((e7(3) * e7(5)).value(), 1);
  EXPECT_EQ((-e7(0)).value(), 0);
  EXPECT_EQ(e7(-1).value(), 6);
}

TEST(FieldTest, MismatchedModuliRejected) {
  const FieldElement a(PrimeField::create(11), 3);
  EXPECT_THROW(a + e7(1), ParameterError);
  EXPECT_THROW(a * e7(1), ParameterError);
}

TEST(FieldTest, Inverse) {
  EXPECT_EQ(e7(3).inverse().value(), 5);
  EXPECT_EQ(FieldElement(PrimeField::create(BigInt("18446744073709551557")), 1).inverse().value(), 1);
  EXPECT_THROW(e7(0).inverse(), NotInvertibleError);
}

TEST(FieldTest, Pow) {
  EXPECT_EQ(e7(3).pow(6).value(), 1);
  EXPECT_EQ(e7(2).pow(5).value(), 4);
  EXPECT_EQ(e7(4).pow(0).value(), 1);
  EXPECT_EQ(e7(0).pow(0).value(), 1);
}

TEST(FieldTest, Sqrt) {
  EXPECT_EQ(e7(2).sqrt()->value(), 3);
  EXPECT_EQ(e7(0).sqrt()->value(), 0);
  EXPECT_FALSE(e7(5).sqrt().has_value());
}

TEST(FieldTest, Legendre) {
  EXPECT_EQ(e7(0).legendre(), 0);
  EXPECT_EQ(e7(4).legendre(), 1);
  EXPECT_EQ(e7(5).legendre(), -1);
}

TEST(FieldTest, RejectsBadModulus) {
  EXPECT_THROW(PrimeField::create(9), ParameterError);
  EXPECT_THROW(PrimeField::create(1), ParameterError);
  // Characteristic 2 is refused by curve validation, not here.
  EXPECT_EQ(PrimeField::create(2)->modulus(), 2);
}

// Squares found by enumeration decide residuosity for every a, p <= 1000.
TEST(FieldProperty, LegendreAndSqrtMatchEnumeration) {
  for (long p = 3; p <= 1000; p += 2) {
    if (!is_probable_prime(p)) continue;
    const FieldPtr F = PrimeField::create(p);
    std::set<long> squares;
    for (long y = 0; y < p; ++y) squares.insert(y * y % p);
    for (long a = 0; a < p; ++a) {
      const FieldElement x(F, a);
      const int expected = a == 0 ? 0 : (squares.count(a) ? 1 : -1);
      ASSERT_EQ(x.legendre(), expected) << "p=" << p << " a=" << a;
      const auto root = x.sqrt();
      ASSERT_EQ(root.has_value(), expected >= 0);
      if (root) {
        ASSERT_EQ(*root * *root, x);
        ASSERT_LE(root->value(), p - root->value()) << "canonical root is the smaller one";
      }
    }
  }
}

TEST(FieldProperty, FuzzedLaws) {
  Gen gen(1);
  const std::vector<BigInt> primes{BigInt(7), BigInt(65537), BigInt("18446744073709551437"),
                                   BigInt("340282366920938463463374607431768211297"),
                                   (BigInt(1) << 127) - 1};
  for (const BigInt& p : primes) {
    const FieldPtr F = PrimeField::create(p);
    for (int i = 0; i < 500; ++i) {
      const FieldElement a(F, gen.big_below(p)), b(F, gen.big_below(p));
      ASSERT_LT((a + b).value(), p);
      ASSERT_LT((a * b).value(), p);
      ASSERT_GE((a - b).value(), 0);
      if (a.is_zero()) continue;
      ASSERT_EQ((a * a.inverse()).value(), 1);
      ASSERT_EQ(a.pow(p - 1).value(), 1);
      const FieldElement sq = a * a;
      ASSERT_EQ(*sq.sqrt() * *sq.sqrt(), sq);
    }
  }
}

// The machine-word backend agrees with GMP on random operands.
TEST(FieldProperty, WordFieldMatchesBigField) {
  Gen gen(2);
  for (const char* ps : {"7", "4294967311", "18446744073709551437", "18446744073709551557", "9223372036854775783"}) {
    const BigInt p(ps);
    const WordField W(to_u64(p));
    const FieldPtr F = PrimeField::create(p);
    for (int i = 0; i < 2000; ++i) {
      const BigInt a = gen.big_below(p), b = gen.big_below(p);
      const std::uint64_t wa = to_u64(a), wb = to_u64(b);
      ASSERT_EQ(from_u64(W.mul(wa, wb)), F->mul(a, b));
      ASSERT_EQ(from_u64(W.add(wa, wb)), F->add(a, b));
      ASSERT_EQ(from_u64(W.sub(wa, wb)), F->sub(a, b));
      if (wa != 0) {
        ASSERT_EQ(from_u64(W.inv(wa)), F->inv(a));
      }
    }
  }
}

}  // namespace
}  // namespace hecc
