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

#include "hecc/divisor.hpp"

namespace hecc {

bool operator==(const PointOnCurve& a, const PointOnCurve& b) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
  return a.x() == b.x() && a.y() == b.y();
}

bool operator<(const PointOnCurve& a, const PointOnCurve& b) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && !b.is_infinity();
  if (a.x().value() != b.x().value()) return a.x().value() < b.x().value();
  return a.y().value() < b.y().value();
}

bool on_curve(const PointOnCurve& P, const CurveParams& c) {
  return P.is_infinity() || c.contains_point(P.x(), P.y());
}

PointOnCurve opposite_point(const PointOnCurve& P, const CurveParams& c) {
  if (!on_curve(P, c)) throw ParameterError("point is not on the curve");
  if (P.is_infinity()) return P;
  return PointOnCurve(P.x(), -P.y() - evaluate(c.h(), P.x()));
}

bool is_special(const PointOnCurve& P, const CurveParams& c) {
  return !P.is_infinity() && opposite_point(P, c) == P;
}

ExplicitDivisor& ExplicitDivisor::add_term(const PointOnCurve& P, std::int64_t m) {
  if (m == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(P, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

std::int64_t ExplicitDivisor::degree() const {
  std::int64_t d = 0;
  for (const auto& [P, m] : terms_) d += m;
  return d;
}

std::int64_t ExplicitDivisor::order_at(const PointOnCurve& P) const {
  auto it = terms_.find(P);
  return it == terms_.end() ? 0 : it->second;
}

std::vector<PointOnCurve> ExplicitDivisor::support() const {
  std::vector<PointOnCurve> out;
  out.reserve(terms_.size());
  for (const auto& [P, m] : terms_) out.push_back(P);
  return out;
}

namespace {

std::int64_t affine_weight(const ExplicitDivisor& D) {
  std::int64_t w = 0;
  for (const auto& [P, m] : D.terms()) {
    if (!P.is_infinity()) w += m;
  }
  return w;
}

}  // namespace

bool is_semi_reduced(const ExplicitDivisor& D, const CurveParams& c) {
  for (const auto& [P, m] : D.terms()) {
    if (!on_curve(P, c)) return false;
    if (P.is_infinity()) continue;
    if (m < 0) return false;
    const PointOnCurve Q = opposite_point(P, c);
    if (Q == P) {
      if (m > 1) return false;
    } else if (D.order_at(Q) != 0) {
      return false;
    }
  }
  return D.order_at(PointOnCurve::infinity()) == -affine_weight(D);
}

bool is_reduced(const ExplicitDivisor& D, const CurveParams& c) {
  return is_semi_reduced(D, c) && affine_weight(D) <= c.genus();
}

namespace {

// v with v(x0) = y0 and v^2 + v h - f = 0 mod (x - x0)^m, by Newton steps.
Polynomial lift_branch(const PointOnCurve& P, std::int64_t m, const CurveParams& c) {
  const BigField& F = c.model().field;
  const Polynomial linear = Polynomial::linear_root(F, P.x().value());
  Polynomial v = Polynomial::constant(F, P.y().value());
  Polynomial modulus = linear;
  for (std::int64_t k = 1; k < m; ++k) {
    modulus *= linear;
    const Polynomial residual = detail::norm_residual(c.model(), v) % modulus;
    const Polynomial slope = (v.scaled(F.from_int(2)) + c.h()) % modulus;
    const Polynomial slope_inv = xgcd(slope, modulus).s;
    v = (v - residual * slope_inv) % modulus;
  }
  return v;
}

std::optional<BigInt> find_root(const Polynomial& a, const CurveParams& c) {
  const PrimeField& F = *c.field();
  const auto coeffs = a.coefficients();
  if (a.degree() == 1) return F.neg(F.mul(coeffs[0], F.inv(coeffs[1])));
  if (a.degree() == 2) {
    const Polynomial m = make_monic(a);
    const BigInt& b = m.coefficient(1);
    const BigInt disc = F.sub(F.mul(b, b), F.mul(4, m.coefficient(0)));
    const auto s = F.sqrt(disc);
    if (!s) return std::nullopt;
    return F.mul(F.sub(*s, b), F.inv(2));
  }
  constexpr unsigned long kExhaustiveLimit = 1ul << 20;
  if (F.modulus() > kExhaustiveLimit) throw GuardError("root search over F_p limited to p <= 2^20");
  for (BigInt x = 0; x < F.modulus(); ++x) {
    if (sgn(evaluate(a, x)) == 0) return x;
  }
  return std::nullopt;
}

}  // namespace

MumfordDivisor explicit_to_mumford(const ExplicitDivisor& D, const CurveParams& c) {
  if (!is_reduced(D, c)) throw InvalidDivisorError("explicit divisor is not reduced");
  const BigField& F = c.model().field;
  Polynomial u = Polynomial::one(F);
  Polynomial v(F);
  for (const auto& [P, m] : D.terms()) {
    if (P.is_infinity()) continue;
    Polynomial w = Polynomial::one(F);
    for (std::int64_t k = 0; k < m; ++k) w *= Polynomial::linear_root(F, P.x().value());
    const Polynomial branch = lift_branch(P, m, c);
    // Chinese remaindering: v = old v mod u, v = branch mod w.
    const auto bez = xgcd(u, w);
    if (!bez.gcd.is_one()) throw InvalidDivisorError("unsupported multiplicity configuration");
    const Polynomial uw = u * w;
    v = (v * bez.t * w + branch * bez.s * u) % uw;
    u = uw;
  }
  return {u, v};
}

std::optional<ExplicitDivisor> mumford_to_explicit(const MumfordDivisor& D, const CurveParams& c) {
  Jacobian(c).require_member(D);
  const FieldPtr& field = c.field();
  ExplicitDivisor out;
  Polynomial rest = D.u;
  while (rest.degree() > 0) {
    const auto root = find_root(rest, c);
    if (!root) return std::nullopt;
    const FieldElement x(field, *root);
    out.add_term(PointOnCurve(x, evaluate(D.v, x)), 1);
    rest = divmod(rest, Polynomial::linear_root(rest.field(), *root)).quotient;
  }
  out.add_term(PointOnCurve::infinity(), -D.u.degree());
  return out;
}

}  // namespace hecc
