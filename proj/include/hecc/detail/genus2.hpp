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

// Genus-2 Cantor steps for the generic case, on fixed-size coefficient
// arrays. Both take weight-2 inputs and compute the same (u, v) as the
// general algorithm:
//
//   add:    gcd(u1, u2) = 1,      V = v1 + u1 s, s = (v2 - v1) / u1 mod u2
//   double: gcd(u, 2v + h) = 1,   V = v + u s,   s = k / (2v + h) mod u,
//                                 k = (f - v h - v^2) / u
//
// followed by a single reduction step u' = (f - V h - V^2) / U. They return
// nullopt when the gcd condition fails; callers then fall back to the
// general algorithm.

#ifndef HECC_DETAIL_GENUS2_HPP
#define HECC_DETAIL_GENUS2_HPP

#include <array>
#include <optional>

#include "hecc/detail/curve_model.hpp"

namespace hecc::detail::genus2 {

template <class Field>
struct Ops {
  using E = typename Field::Elem;
  const Field& F;

  E add(const E& a, const E& b) const { return F.add(a, b); }
  E sub(const E& a, const E& b) const { return F.sub(a, b); }
  E mul(const E& a, const E& b) const { return F.mul(a, b); }
  E neg(const E& a) const { return F.neg(a); }
};

template <class Field, std::size_t N>
std::array<typename Field::Elem, N> coeffs(const BasicPolynomial<Field>& a) {
  std::array<typename Field::Elem, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = a.coefficient(i);
  return out;
}

template <class Field, std::size_t N>
BasicPolynomial<Field> to_poly(const Field& F, const std::array<typename Field::Elem, N>& a, std::size_t n) {
  typename BasicPolynomial<Field>::storage_type s(a.begin(), a.begin() + n);
  return BasicPolynomial<Field>(F, std::move(s));
}

/// Numerator and resultant of (w1 x + w0) / (m1 x + m0) modulo monic
/// x^2 + n1 x + n0: the quotient is (s1 x + s0) / res. A zero resultant
/// means the linear factor shares a root with the modulus.
template <class Field>
struct Quotient {
  std::array<typename Field::Elem, 2> s;
  typename Field::Elem res;
};

template <class Field>
Quotient<Field> divide_mod(const Field& F, const typename Field::Elem& w1, const typename Field::Elem& w0,
                           const typename Field::Elem& m1, const typename Field::Elem& m0,
                           const typename Field::Elem& n1, const typename Field::Elem& n0) {
  const Ops<Field> o{F};
  // (m1 x + m0)(-m1 x + m0 - m1 n1) = res mod (x^2 + n1 x + n0)
  const auto i1 = o.neg(m1);
  const auto i0 = o.sub(m0, o.mul(m1, n1));
  const auto t = o.mul(w1, i1);
  return {{o.sub(o.mul(w0, i0), o.mul(t, n0)), o.sub(o.add(o.mul(w1, i0), o.mul(w0, i1)), o.mul(t, n1))},
          o.add(o.mul(m0, i0), o.mul(o.mul(m1, m1), n0))};
}

/// One reduction step from (U, V), deg U = 4 monic, deg V <= 3.
template <class Field>
BasicMumford<Field> reduce_once(const CurveModel<Field>& c, const std::array<typename Field::Elem, 5>& U,
                                const std::array<typename Field::Elem, 4>& V,
                                const std::optional<typename Field::Elem>& lead_inv) {
  using E = typename Field::Elem;
  const Field& F = c.field;
  const Ops<Field> o{F};
  const auto f = coeffs<Field, 6>(c.f);
  const auto h = coeffs<Field, 3>(c.h);

  // T = f - V h - V^2
  std::array<E, 7> T;
  for (std::size_t i = 0; i < 7; ++i) T[i] = i < 6 ? f[i] : F.zero();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 3; ++j) T[i + j] = o.sub(T[i + j], o.mul(V[i], h[j]));
    T[2 * i] = o.sub(T[2 * i], o.mul(V[i], V[i]));
    for (std::size_t j = i + 1; j < 4; ++j) {
      const E t = o.mul(V[i], V[j]);
      T[i + j] = o.sub(T[i + j], o.add(t, t));
    }
  }

  // q = T / U; the remainder is zero by construction.
  std::array<E, 3> q;
  for (std::size_t k = 3; k-- > 0;) {
    q[k] = T[k + 4];
    for (std::size_t i = 0; i < 4; ++i) T[k + i] = o.sub(T[k + i], o.mul(q[k], U[i]));
  }

  // W = -h - V, then v' = W mod u' with u' = monic(q).
  std::array<E, 4> W;
  for (std::size_t i = 0; i < 4; ++i) W[i] = o.neg(o.add(V[i], i < 3 ? h[i] : F.zero()));

  if (!Field::is_zero(q[2])) {
    const E lead = lead_inv ? *lead_inv : F.inv(q[2]);
    std::array<E, 3> u{o.mul(q[0], lead), o.mul(q[1], lead), F.one()};
    for (std::size_t k = 2; k-- > 0;) {
      const E top = W[k + 2];
      W[k + 1] = o.sub(W[k + 1], o.mul(top, u[1]));
      W[k] = o.sub(W[k], o.mul(top, u[0]));
    }
    return {to_poly<Field, 3>(F, u, 3), to_poly<Field, 4>(F, W, 2)};
  }
  // Weight one: u' = x - root.
  const E root = o.neg(o.mul(q[0], F.inv(q[1])));
  E w = F.zero();
  for (std::size_t i = 4; i-- > 0;) w = o.add(o.mul(w, root), W[i]);
  return {BasicPolynomial<Field>::linear_root(F, root), BasicPolynomial<Field>::constant(F, w)};
}

/// Scales the quotient by 1/res, lifts V = v + u s with u = x^2 + u1 x + u0,
/// and reduces. The leading coefficient of the reduced quotient is -s1^2, so
/// one inversion of res * s1 serves both divisions.
template <class Field>
std::optional<BasicMumford<Field>> finish(const CurveModel<Field>& c, const Quotient<Field>& q,
                                          const std::array<typename Field::Elem, 5>& U,
                                          const typename Field::Elem& u1, const typename Field::Elem& u0,
                                          const typename Field::Elem& v1, const typename Field::Elem& v0) {
  using E = typename Field::Elem;
  const Field& F = c.field;
  const Ops<Field> o{F};
  if (Field::is_zero(q.res)) return std::nullopt;
  E rinv;
  std::optional<E> lead_inv;
  if (Field::is_zero(q.s[1])) {
    rinv = F.inv(q.res);
  } else {
    const E z = F.inv(o.mul(q.res, q.s[1]));
    rinv = o.mul(z, q.s[1]);
    const E s1inv = o.mul(z, o.mul(q.res, q.res));
    lead_inv = o.neg(o.mul(s1inv, s1inv));
  }
  const E s0 = o.mul(q.s[0], rinv), s1 = o.mul(q.s[1], rinv);
  const std::array<E, 4> V{o.add(o.mul(u0, s0), v0), o.add(o.add(o.mul(u1, s0), o.mul(u0, s1)), v1),
                           o.add(s0, o.mul(u1, s1)), s1};
  return reduce_once(c, U, V, lead_inv);
}

template <class Field>
std::optional<BasicMumford<Field>> add(const CurveModel<Field>& c, const BasicMumford<Field>& a,
                                       const BasicMumford<Field>& b) {
  const Field& F = c.field;
  const Ops<Field> o{F};
  const auto a1 = a.u.coefficient(1), a0 = a.u.coefficient(0);
  const auto b1 = b.u.coefficient(1), b0 = b.u.coefficient(0);
  const auto av1 = a.v.coefficient(1), av0 = a.v.coefficient(0);

  // u1 mod u2 = (a1 - b1) x + (a0 - b0)
  const auto q = divide_mod(F, o.sub(b.v.coefficient(1), av1), o.sub(b.v.coefficient(0), av0), o.sub(a1, b1),
                            o.sub(a0, b0), b1, b0);

  const std::array U{o.mul(a0, b0), o.add(o.mul(a1, b0), o.mul(a0, b1)), o.add(o.add(a0, b0), o.mul(a1, b1)),
                     o.add(a1, b1), F.one()};
  return finish(c, q, U, a1, a0, av1, av0);
}

template <class Field>
std::optional<BasicMumford<Field>> twice(const CurveModel<Field>& c, const BasicMumford<Field>& a) {
  using E = typename Field::Elem;
  const Field& F = c.field;
  const Ops<Field> o{F};
  const E u1 = a.u.coefficient(1), u0 = a.u.coefficient(0);
  const E v1 = a.v.coefficient(1), v0 = a.v.coefficient(0);
  const auto f = coeffs<Field, 6>(c.f);
  const auto h = coeffs<Field, 3>(c.h);

  // N = f - v h - v^2, degree 5; k = N / u, reduced mod u.
  std::array<E, 6> N = f;
  for (std::size_t j = 0; j < 3; ++j) {
    N[j] = o.sub(N[j], o.mul(v0, h[j]));
    N[j + 1] = o.sub(N[j + 1], o.mul(v1, h[j]));
  }
  const E cross = o.mul(v0, v1);
  N[0] = o.sub(N[0], o.mul(v0, v0));
  N[1] = o.sub(N[1], o.add(cross, cross));
  N[2] = o.sub(N[2], o.mul(v1, v1));
  std::array<E, 4> k;
  for (std::size_t i = 4; i-- > 0;) {
    k[i] = N[i + 2];
    N[i + 1] = o.sub(N[i + 1], o.mul(k[i], u1));
    N[i] = o.sub(N[i], o.mul(k[i], u0));
  }
  for (std::size_t i = 2; i-- > 0;) {
    const E top = k[i + 2];
    k[i + 1] = o.sub(k[i + 1], o.mul(top, u1));
    k[i] = o.sub(k[i], o.mul(top, u0));
  }

  // (2v + h) mod u
  const E m1 = o.sub(o.add(o.add(v1, v1), h[1]), o.mul(h[2], u1));
  const E m0 = o.sub(o.add(o.add(v0, v0), h[0]), o.mul(h[2], u0));
  const auto q = divide_mod(F, k[1], k[0], m1, m0, u1, u0);

  const E t = o.mul(u1, u0);
  const std::array U{o.mul(u0, u0), o.add(t, t), o.add(o.mul(u1, u1), o.add(u0, u0)), o.add(u1, u1), F.one()};
  return finish(c, q, U, u1, u0, v1, v0);
}

}  // namespace hecc::detail::genus2

#endif  // HECC_DETAIL_GENUS2_HPP
