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

// Cantor composition and reduction on Mumford pairs for
// y^2 + h(x) y = f(x), deg f = 2g+1, odd characteristic.
//
// Nothing in here validates its inputs; the Jacobian facade does that once
// at the API boundary and then runs whole scalar multiplications in the
// kernel.

#ifndef HECC_DETAIL_CANTOR_HPP
#define HECC_DETAIL_CANTOR_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "hecc/bigint.hpp"
#include "hecc/detail/curve_model.hpp"
#include "hecc/detail/genus2.hpp"
#include "hecc/poly.hpp"

namespace hecc {

namespace detail {

template <class Field>
BasicMumford<Field> identity(const CurveModel<Field>& c) {
  return {BasicPolynomial<Field>::one(c.field), BasicPolynomial<Field>(c.field)};
}

/// v^2 + v h - f, the polynomial every Mumford u must divide.
template <class Field>
BasicPolynomial<Field> norm_residual(const CurveModel<Field>& c, const BasicPolynomial<Field>& v) {
  return v * (v + c.h) - c.f;
}

template <class Field>
bool is_reduced_pair(const CurveModel<Field>& c, const BasicMumford<Field>& d) {
  if (!(d.u.field() == c.field) || !(d.v.field() == c.field)) return false;
  if (!d.u.is_monic()) return false;
  if (d.u.degree() > c.genus || d.v.degree() >= d.u.degree()) return false;
  return (norm_residual(c, d.v) % d.u).is_zero();
}

template <class Field>
BasicPolynomial<Field> exact_quotient(const BasicPolynomial<Field>& a, const BasicPolynomial<Field>& b) {
  auto qr = divmod(a, b);
  if (!qr.remainder.is_zero()) throw InvalidDivisorError("Cantor step produced an inexact division");
  return std::move(qr.quotient);
}

/// Reduction: brings a semi-reduced (u, v) down to deg u <= g.
template <class Field>
BasicMumford<Field> reduce(const CurveModel<Field>& c, BasicPolynomial<Field> u, BasicPolynomial<Field> v) {
  while (u.degree() > c.genus) {
    BasicPolynomial<Field> next_u = exact_quotient(c.f - v * (v + c.h), u);
    v = (-c.h - v) % next_u;
    u = make_monic(next_u);
  }
  u = make_monic(u);
  v = v % u;
  return {std::move(u), std::move(v)};
}

template <class Field>
BasicMumford<Field> negate(const CurveModel<Field>& c, const BasicMumford<Field>& a) {
  if (a.is_identity()) return a;
  return {a.u, (-a.v - c.h) % a.u};
}

/// Cantor composition followed by reduction, for any genus.
template <class Field>
BasicMumford<Field> cantor_add(const CurveModel<Field>& c, const BasicMumford<Field>& a,
                               const BasicMumford<Field>& b) {
  using Poly = BasicPolynomial<Field>;
  if (a.is_identity()) return b;
  if (b.is_identity()) return a;

  // d1 = e1 u1 + e2 u2
  Poly d1(c.field), e1(c.field), e2(c.field);
  if (a.u == b.u) {
    d1 = a.u;
    e2 = Poly::one(c.field);
  } else {
    auto g = xgcd(a.u, b.u);
    d1 = std::move(g.gcd);
    e1 = std::move(g.s);
    e2 = std::move(g.t);
  }

  if (d1.is_one()) {
    Poly u = a.u * b.u;
    Poly v = (e1 * a.u * b.v + e2 * b.u * a.v) % u;
    return reduce(c, std::move(u), std::move(v));
  }

  // d = c1 d1 + c2 (v1 + v2 + h)
  auto g = xgcd(d1, a.v + b.v + c.h);
  const Poly& d = g.gcd;
  const Poly s1 = g.s * e1;
  const Poly s2 = g.s * e2;
  const Poly& s3 = g.t;

  Poly u = exact_quotient(a.u * b.u, d * d);
  if (u.is_one()) return identity(c);
  Poly numer = s1 * a.u * b.v + s2 * b.u * a.v;
  if (!s3.is_zero()) numer += s3 * (a.v * b.v + c.f);
  Poly v = exact_quotient(numer, d) % u;
  return reduce(c, std::move(u), std::move(v));
}

/// cantor_add with the genus-2 fast path for weight-2 inputs.
template <class Field>
BasicMumford<Field> add(const CurveModel<Field>& c, const BasicMumford<Field>& a, const BasicMumford<Field>& b) {
  if (c.genus == 2 && a.u.degree() == 2 && b.u.degree() == 2) {
    if (a.u == b.u) {
      if (a.v == b.v) {
        if (auto r = genus2::twice(c, a)) return std::move(*r);
      }
    } else if (auto r = genus2::add(c, a, b)) {
      return std::move(*r);
    }
  }
  return cantor_add(c, a, b);
}

/// Left-to-right sliding-window double-and-add over odd multiples
/// a, 3a, ..., 15a; n >= 0.
template <class Field>
BasicMumford<Field> multiply(const CurveModel<Field>& c, const BigInt& n, const BasicMumford<Field>& a) {
  if (sgn(n) < 0) throw ParameterError("scalar multiplication by a negative integer");
  constexpr std::size_t kWindow = 4;
  const std::size_t bits = bit_length(n);
  const mpz_srcptr z = n.get_mpz_t();
  if (sgn(n) == 0) return identity(c);

  std::vector<BasicMumford<Field>> odd{a};
  const std::size_t table = std::size_t{1} << (std::min(bits, kWindow) - 1);
  if (table > 1) {
    const BasicMumford<Field> twice = add(c, a, a);
    while (odd.size() < table) odd.push_back(add(c, odd.back(), twice));
  }

  BasicMumford<Field> acc = identity(c);
  for (std::size_t i = bits; i-- > 0;) {
    if (!mpz_tstbit(z, i)) {
      acc = add(c, acc, acc);
      continue;
    }
    // Longest window [lo, i] of at most kWindow bits ending in a set bit.
    std::size_t lo = i + 1 > kWindow ? i + 1 - kWindow : 0;
    while (!mpz_tstbit(z, lo)) ++lo;
    std::size_t digit = 0;
    for (std::size_t j = i + 1; j-- > lo;) {
      acc = add(c, acc, acc);
      digit = 2 * digit + mpz_tstbit(z, j);
    }
    acc = add(c, acc, odd[digit / 2]);
    i = lo;
  }
  return acc;
}

}  // namespace detail
}  // namespace hecc

#endif  // HECC_DETAIL_CANTOR_HPP
