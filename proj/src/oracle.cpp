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

#include "hecc/oracle.hpp"

#include <algorithm>
#include <tuple>

#include "hecc/codec.hpp"

namespace hecc::oracle {

namespace {

using Coeffs = std::vector<std::uint64_t>;

struct SmallCurve {
  std::uint64_t p;
  int genus;
  Coeffs f;
  Coeffs h;
};

Coeffs small_coeffs(const Polynomial& a) {
  Coeffs out;
  for (const BigInt& c : a.coefficients()) out.push_back(to_u64(c));
  return out;
}

SmallCurve small_curve(const CurveParams& c, std::uint64_t limit) {
  if (c.p() > limit) throw GuardError("field too large for exhaustive enumeration");
  return {to_u64(c.p()), c.genus(), small_coeffs(c.f()), small_coeffs(c.h())};
}

std::uint64_t eval(const Coeffs& a, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = (acc * x + *it) % p;
  return acc;
}

// Product mod p; degrees here stay tiny.
Coeffs mul(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return out;
}

void add_into(Coeffs& acc, const Coeffs& b, std::uint64_t p, bool subtract) {
  if (acc.size() < b.size()) acc.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) acc[i] = (acc[i] + (subtract ? p - b[i] : b[i])) % p;
}

// True when monic u divides a.
bool divides(const Coeffs& u, Coeffs a, std::uint64_t p) {
  const std::size_t du = u.size() - 1;
  for (std::size_t top = a.size(); top-- > du;) {
    const std::uint64_t lead = a[top];
    if (lead == 0) continue;
    for (std::size_t k = 0; k <= du; ++k) {
      std::uint64_t& slot = a[top - du + k];
      slot = (slot + p - (lead * u[k]) % p) % p;
    }
  }
  for (std::size_t i = 0; i < std::min(du, a.size()); ++i) {
    if (a[i] != 0) return false;
  }
  return true;
}

Polynomial to_poly(const BigField& field, const Coeffs& a) {
  Polynomial::storage_type s;
  for (std::uint64_t c : a) s.push_back(from_u64(c));
  return Polynomial(field, std::move(s));
}

// Advances a base-p counter; false after the last value.
bool next_tuple(Coeffs& digits, std::uint64_t p) {
  for (auto& d : digits) {
    if (++d < p) return true;
    d = 0;
  }
  return false;
}

std::string key_of(const MumfordDivisor& d) {
  const Bytes b = codec::encode_divisor(d);
  return std::string(b.begin(), b.end());
}

}  // namespace

std::vector<PointOnCurve> enumerate_points(const CurveParams& c) {
  const SmallCurve sc = small_curve(c, kMaxPointFieldSize);
  const std::uint64_t p = sc.p;
  // roots[s] lists the y with y^2 = s.
  std::vector<std::vector<std::uint64_t>> roots(p);
  for (std::uint64_t y = 0; y < p; ++y) roots[y * y % p].push_back(y);

  const std::uint64_t inv2 = (p + 1) / 2;
  std::vector<PointOnCurve> out{PointOnCurve::infinity()};
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t hx = eval(sc.h, x, p);
    const std::uint64_t disc = (hx * hx + 4 * eval(sc.f, x, p)) % p;
    std::vector<std::uint64_t> ys;
    for (std::uint64_t s : roots[disc]) ys.push_back((s + p - hx) % p * inv2 % p);
    std::sort(ys.begin(), ys.end());
    for (std::uint64_t y : ys) {
      out.emplace_back(FieldElement(c.field(), from_u64(x)), FieldElement(c.field(), from_u64(y)));
    }
  }
  return out;
}

EnumeratedGroup::EnumeratedGroup(CurveParams curve, std::vector<MumfordDivisor> elements)
    : curve_(std::move(curve)), elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(key_of(elements_[i]), i).second) throw ParameterError("duplicate group element");
  }
}

std::optional<std::size_t> EnumeratedGroup::index_of(const MumfordDivisor& d) const {
  const auto it = index_.find(key_of(d));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

EnumeratedGroup enumerate_reduced_divisors(const CurveParams& c) {
  const SmallCurve sc = small_curve(c, kMaxDivisorSearch);
  const std::uint64_t p = sc.p;
  std::uint64_t budget = 1;
  for (int i = 0; i < 2 * sc.genus; ++i) {
    budget *= p;
    if (budget > kMaxDivisorSearch) throw GuardError("p^(2g) exceeds the divisor enumeration limit");
  }

  const BigField& field = c.model().field;
  std::vector<MumfordDivisor> out;
  out.push_back({Polynomial::one(field), Polynomial(field)});
  for (int d = 1; d <= sc.genus; ++d) {
    Coeffs ulow(d, 0);
    do {
      Coeffs u = ulow;
      u.push_back(1);
      Coeffs v(d, 0);
      do {
        Coeffs w = mul(v, v, p);
        add_into(w, mul(v, sc.h, p), p, false);
        add_into(w, sc.f, p, true);
        if (divides(u, std::move(w), p)) out.push_back({to_poly(field, u), to_poly(field, v)});
      } while (next_tuple(v, p));
    } while (next_tuple(ulow, p));
  }
  return EnumeratedGroup(c, std::move(out));
}

std::uint64_t group_order_bruteforce(const CurveParams& c) { return enumerate_reduced_divisors(c).order(); }

std::uint64_t element_order(const MumfordDivisor& d, const EnumeratedGroup& group) {
  const Jacobian jac(group.curve());
  jac.require_member(d);
  MumfordDivisor acc = d;
  for (std::uint64_t n = 1; n <= group.order(); ++n) {
    if (acc.is_identity()) return n;
    acc = jac.add(acc, d);
  }
  throw ParameterError("element order exceeds the group order");
}

std::uint64_t largest_prime_factor(std::uint64_t n) {
  if (n < 2) throw ParameterError("no prime factor below 2");
  std::uint64_t largest = 1;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    while (n % q == 0) {
      largest = q;
      n /= q;
    }
  }
  return n > 1 ? n : largest;
}

DomainParams make_prime_order_domain(const EnumeratedGroup& group) {
  const std::uint64_t n = group.order();
  if (n < 2) throw ParameterError("trivial group has no prime-order element");
  const std::uint64_t r = largest_prime_factor(n);
  const Jacobian jac(group.curve());
  const BigInt cofactor = from_u64(n / r);
  for (const MumfordDivisor& d : group.elements()) {
    MumfordDivisor base = jac.multiply(cofactor, d);
    if (!base.is_identity()) return DomainParams(group.curve(), std::move(base), from_u64(r));
  }
  throw ParameterError("no element of prime order found");
}

std::string enumeration_report(const EnumeratedGroup& group) {
  std::string out;
  for (const MumfordDivisor& d : group.elements()) {
    out += to_hex(codec::encode_divisor(d));
    out += '\n';
  }
  return out;
}

namespace {

std::int64_t md(std::int64_t a, std::int64_t p) {
  const std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t ec_inv(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = md(a, p), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::pair(s1, s0 - q * s1);
  }
  if (r0 != 1) throw NotInvertibleError("element is not invertible");
  return md(s0, p);
}

}  // namespace

bool ec_on_curve(const EcPoint& P, const EllipticCurve& e) {
  if (P.infinity) return true;
  if (P.x < 0 || P.x >= e.p || P.y < 0 || P.y >= e.p) return false;
  const std::int64_t rhs = md(md(md(P.x * P.x, e.p) * P.x, e.p) + md(e.a * P.x, e.p) + e.b, e.p);
  return md(P.y * P.y, e.p) == rhs;
}

std::vector<EcPoint> ec_points(const EllipticCurve& e) {
  std::vector<EcPoint> out{EcPoint::at_infinity()};
  for (std::int64_t x = 0; x < e.p; ++x) {
    for (std::int64_t y = 0; y < e.p; ++y) {
      const EcPoint P = EcPoint::affine(x, y);
      if (ec_on_curve(P, e)) out.push_back(P);
    }
  }
  return out;
}

EcPoint ec_add(const EcPoint& P, const EcPoint& Q, const EllipticCurve& e) {
  if (!ec_on_curve(P, e) || !ec_on_curve(Q, e)) throw ParameterError("point is not on the elliptic curve");
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  const std::int64_t p = e.p;
  std::int64_t lambda;
  if (P.x == Q.x) {
    if (md(P.y + Q.y, p) == 0) return EcPoint::at_infinity();
    lambda = md(md(3 * md(P.x * P.x, p) + e.a, p) * ec_inv(2 * P.y, p), p);
  } else {
    lambda = md(md(Q.y - P.y, p) * ec_inv(Q.x - P.x, p), p);
  }
  const std::int64_t x3 = md(lambda * lambda - P.x - Q.x, p);
  const std::int64_t y3 = md(lambda * md(P.x - x3, p) - P.y, p);
  return EcPoint::affine(x3, y3);
}

std::pair<BigInt, BigInt> hasse_weil_interval(const BigInt& p, int genus) {
  if (genus < 0) throw ParameterError("negative genus");
  // (1 + sqrt p)^(2g) = x + y sqrt p; the lower end is x - y sqrt p.
  BigInt x = 1, y = 0;
  for (int i = 0; i < 2 * genus; ++i) {
    BigInt nx = x + y * p;
    BigInt ny = x + y;
    x = std::move(nx);
    y = std::move(ny);
  }
  const BigInt s = isqrt(y * y * p);
  return {x - s, x + s};
}

}  // namespace hecc::oracle
