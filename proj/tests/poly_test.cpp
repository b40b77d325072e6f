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

#include "hecc/poly.hpp"
#include "support.hpp"

namespace hecc {
namespace {

using testing::Gen;

const FieldPtr& F7() {
  static const FieldPtr f = PrimeField::create(7);
  return f;
}

Polynomial P(std::initializer_list<long> c) { return testing::poly(F7(), c); }

TEST(PolyTest, Arithmetic) {
  EXPECT_EQ(P({1, 1}) + P({6, 1}), P({0, 2}));
  EXPECT_EQ(P({0, 1}) * P({5, 1}), P({0, 5, 1}));
  const Polynomial a = P({3, 0, 4});
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a - a).degree(), kZeroDegree);
}

TEST(PolyTest, MismatchedModuliRejected) {
  const Polynomial b = testing::poly(PrimeField::create(11), {1, 1});
  EXPECT_THROW(P({1}) + b, ParameterError);
  EXPECT_THROW(P({1}) * b, ParameterError);
}

TEST(PolyTest, Divmod) {
  auto [q, r] = divmod(P({1, 0, 1}), P({1, 1}));
  EXPECT_EQ(q, P({6, 1}));
  EXPECT_EQ(r, P({2}));

  const Polynomial a = P({2, 5, 0, 3});
  auto [q1, r1] = divmod(a, a);
  EXPECT_EQ(q1, P({1}));
  EXPECT_TRUE(r1.is_zero());

  const Polynomial f = P({1, 3, 0, 0, 0, 1});
  const Polynomial df = P({3, 0, 0, 0, 5});
  auto [q2, r2] = divmod(f, df);
  EXPECT_EQ(q2, P({0, 3}));
  EXPECT_EQ(r2, P({1, 1}));
  EXPECT_EQ(q2 * df + r2, f);

  EXPECT_THROW(divmod(f, Polynomial(BigField(F7()))), ParameterError);
}

TEST(PolyTest, Xgcd) {
  const Polynomial a = P({-1, 0, 1}), b = P({-1, 1});
  auto g = xgcd(a, b);
  EXPECT_EQ(g.gcd, P({6, 1}));
  EXPECT_EQ(g.s * a + g.t * b, g.gcd);

  const Polynomial c = P({3, 0, 6});
  auto z = xgcd(c, Polynomial(BigField(F7())));
  EXPECT_EQ(z.gcd, P({4, 0, 1}));
  EXPECT_EQ(z.s, P({6}));
  EXPECT_TRUE(z.t.is_zero());
  EXPECT_EQ(z.s * c, z.gcd);

  const Polynomial f = P({1, 3, 0, 0, 0, 1});
  auto h = xgcd(f, derivative(f));
  EXPECT_EQ(h.gcd, P({1}));
  EXPECT_EQ(h.s * f + h.t * derivative(f), h.gcd);

  const Polynomial zero{BigField(F7())};
  EXPECT_THROW(xgcd(zero, zero), ParameterError);
}

TEST(PolyTest, Evaluate) {
  const Polynomial f = P({1, 3, 0, 0, 0, 1});
  EXPECT_EQ(evaluate(f, FieldElement(F7(), 0)).value(), 1);
  EXPECT_EQ(evaluate(f, FieldElement(F7(), 2)).value(), 4);
  EXPECT_EQ(evaluate(Polynomial(BigField(F7())), FieldElement(F7(), 5)).value(), 0);
}

TEST(PolyTest, DerivativeAndMonic) {
  EXPECT_EQ(derivative(P({1, 3, 0, 0, 0, 1})), P({3, 0, 0, 0, 5}));
  EXPECT_TRUE(derivative(P({4})).is_zero());
  EXPECT_EQ(make_monic(P({3, 3})), P({1, 1}));
  EXPECT_THROW(make_monic(Polynomial(BigField(F7()))), ParameterError);
}

class PolyProperty : public ::testing::TestWithParam<const char*> {};

TEST_P(PolyProperty, RingAxioms) {
  const FieldPtr F = PrimeField::create(BigInt(GetParam()));
  Gen gen(3);
  for (int i = 0; i < 2000; ++i) {
    const Polynomial a = gen.polynomial(F, 6), b = gen.polynomial(F, 6), c = gen.polynomial(F, 6);
    ASSERT_EQ((a + b) * c, a * c + b * c);
    ASSERT_EQ(a * b, b * a);
    if (!a.is_zero() && !b.is_zero()) {
      ASSERT_EQ((a * b).degree(), a.degree() + b.degree());
    }
  }
}

TEST_P(PolyProperty, DivmodRoundtrip) {
  const FieldPtr F = PrimeField::create(BigInt(GetParam()));
  Gen gen(4);
  for (int i = 0; i < 10000; ++i) {
    const Polynomial a = gen.polynomial(F, 8), b = gen.polynomial(F, 5);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    ASSERT_EQ(q * b + r, a);
    ASSERT_LT(r.degree(), b.degree());
  }
}

TEST_P(PolyProperty, XgcdCertificate) {
  const FieldPtr F = PrimeField::create(BigInt(GetParam()));
  Gen gen(5);
  for (int i = 0; i < 2000; ++i) {
    const Polynomial common = gen.polynomial(F, 2);
    Polynomial a = gen.polynomial(F, 5), b = gen.polynomial(F, 5);
    if (!common.is_zero()) {
      a = a * common;
      b = b * common;
    }
    if (a.is_zero() && b.is_zero()) continue;
    auto g = xgcd(a, b);
    ASSERT_EQ(g.s * a + g.t * b, g.gcd);
    ASSERT_TRUE(g.gcd.is_monic());
    ASSERT_TRUE((a % g.gcd).is_zero());
    ASSERT_TRUE((b % g.gcd).is_zero());
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, PolyProperty, ::testing::Values("7", "101", "18446744073709551437"));

}  // namespace
}  // namespace hecc
