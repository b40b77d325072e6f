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

// Dense univariate polynomials over a prime field.
//
// Coefficients are stored constant term first with trailing zeros trimmed, so
// the zero polynomial is the empty vector and degree() returns kZeroDegree.
// Degrees in this library stay below 2g+2, so the inline buffer of the
// small_vector covers every genus-2 computation without heap traffic.

#ifndef HECC_POLY_HPP
#define HECC_POLY_HPP

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <initializer_list>
#include <span>
#include <utility>

#include "hecc/errors.hpp"
#include "hecc/field.hpp"

namespace hecc {

/// Stand-in for -infinity, the degree of the zero polynomial.
inline constexpr int kZeroDegree = -1;

template <class Field>
class BasicPolynomial {
 public:
  using field_type = Field;
  using value_type = typename Field::Elem;
  using storage_type = boost::container::small_vector<value_type, 8>;

  explicit BasicPolynomial(Field field) : field_(std::move(field)) {}

  /// `coeffs` must already be canonical residues; trailing zeros are trimmed.
  BasicPolynomial(Field field, storage_type coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    trim();
  }

  /// Small integer coefficients, constant term first, reduced into the field.
  BasicPolynomial(Field field, std::initializer_list<long> coeffs) : field_(std::move(field)) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.push_back(field_.from_int(c));
    trim();
  }

  static BasicPolynomial constant(const Field& field, value_type c) {
    storage_type s;
    s.push_back(std::move(c));
    return BasicPolynomial(field, std::move(s));
  }

  static BasicPolynomial one(const Field& field) { return constant(field, field.one()); }

  /// x - root
  static BasicPolynomial linear_root(const Field& field, const value_type& root) {
    storage_type s;
    s.push_back(field.neg(root));
    s.push_back(field.one());
    return BasicPolynomial(field, std::move(s));
  }

  const Field& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && Field::is_one(coeffs_[0]); }
  bool is_monic() const noexcept { return !coeffs_.empty() && Field::is_one(coeffs_.back()); }

  /// Coefficient of x^i; zero beyond the degree.
  value_type coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : field_.zero();
  }
  /// Precondition: nonzero polynomial.
  const value_type& leading() const { return coeffs_.back(); }
  std::span<const value_type> coefficients() const noexcept { return {coeffs_.data(), coeffs_.size()}; }

  BasicPolynomial scaled(const value_type& k) const {
    if (Field::is_zero(k)) return BasicPolynomial(field_);
    storage_type out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_.mul(coeffs_[i], k);
    return BasicPolynomial(field_, std::move(out));
  }

  BasicPolynomial operator-() const {
    storage_type out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_.neg(coeffs_[i]);
    return BasicPolynomial(field_, std::move(out));
  }

  friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) {
    require_same_field(a, b);
    const auto& F = a.field_;
    const BasicPolynomial& lo = a.coeffs_.size() < b.coeffs_.size() ? a : b;
    const BasicPolynomial& hi = a.coeffs_.size() < b.coeffs_.size() ? b : a;
    storage_type out(hi.coeffs_.begin(), hi.coeffs_.end());
    for (std::size_t i = 0; i < lo.coeffs_.size(); ++i) out[i] = F.add(out[i], lo.coeffs_[i]);
    return BasicPolynomial(F, std::move(out));
  }

  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) {
    require_same_field(a, b);
    const auto& F = a.field_;
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    storage_type out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i >= b.coeffs_.size()) {
        out[i] = a.coeffs_[i];
      } else if (i >= a.coeffs_.size()) {
        out[i] = F.neg(b.coeffs_[i]);
      } else {
        out[i] = F.sub(a.coeffs_[i], b.coeffs_[i]);
      }
    }
    return BasicPolynomial(F, std::move(out));
  }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    require_same_field(a, b);
    const auto& F = a.field_;
    if (a.is_zero() || b.is_zero()) return BasicPolynomial(F);
    storage_type out(a.coeffs_.size() + b.coeffs_.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (Field::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] = F.add(out[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    return BasicPolynomial(F, std::move(out));
  }

  BasicPolynomial& operator+=(const BasicPolynomial& b) { return *this = *this + b; }
  BasicPolynomial& operator-=(const BasicPolynomial& b) { return *this = *this - b; }
  BasicPolynomial& operator*=(const BasicPolynomial& b) { return *this = *this * b; }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    return a.field_ == b.field_ && std::equal(a.coeffs_.begin(), a.coeffs_.end(),
                                               b.coeffs_.begin(), b.coeffs_.end());
  }

  static void require_same_field(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (!(a.field_ == b.field_)) throw ParameterError("polynomials over different fields");
  }

 private:
  void trim() {
    while (!coeffs_.empty() && Field::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  Field field_;
  storage_type coeffs_;
};

template <class Field>
struct DivMod {
  BasicPolynomial<Field> quotient;
  BasicPolynomial<Field> remainder;
};

/// a = q*b + r with deg r < deg b. Throws ParameterError when b = 0.
template <class Field>
DivMod<Field> divmod(const BasicPolynomial<Field>& a, const BasicPolynomial<Field>& b) {
  using Poly = BasicPolynomial<Field>;
  Poly::require_same_field(a, b);
  if (b.is_zero()) throw ParameterError("polynomial division by zero");
  const Field& F = a.field();
  if (a.degree() < b.degree()) return {Poly(F), a};

  auto rem_c = a.coefficients();
  typename Poly::storage_type rem(rem_c.begin(), rem_c.end());
  const auto bc = b.coefficients();
  const int db = b.degree();
  const bool monic = b.is_monic();
  const typename Field::Elem lead_inv = monic ? F.one() : F.inv(b.leading());

  typename Poly::storage_type quo(static_cast<std::size_t>(a.degree() - db + 1), F.zero());
  for (int i = a.degree(); i >= db; --i) {
    if (Field::is_zero(rem[i])) continue;
    const auto q = monic ? rem[i] : F.mul(rem[i], lead_inv);
    quo[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] = F.sub(rem[i - db + j], F.mul(q, bc[j]));
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(F, std::move(quo)), Poly(F, std::move(rem))};
}

/// a mod b
template <class Field>
BasicPolynomial<Field> operator%(const BasicPolynomial<Field>& a, const BasicPolynomial<Field>& b) {
  if (a.degree() < b.degree() && !b.is_zero()) {
    BasicPolynomial<Field>::require_same_field(a, b);
    return a;
  }
  return divmod(a, b).remainder;
}

/// Throws ParameterError for the zero polynomial.
template <class Field>
BasicPolynomial<Field> make_monic(const BasicPolynomial<Field>& a) {
  if (a.is_zero()) throw ParameterError("cannot make the zero polynomial monic");
  if (a.is_monic()) return a;
  return a.scaled(a.field().inv(a.leading()));
}

template <class Field>
struct Xgcd {
  BasicPolynomial<Field> gcd;  // monic
  BasicPolynomial<Field> s;
  BasicPolynomial<Field> t;
};

/// Monic gcd d of a and b with s*a + t*b = d. Throws ParameterError when both
/// inputs are zero.
template <class Field>
Xgcd<Field> xgcd(const BasicPolynomial<Field>& a, const BasicPolynomial<Field>& b) {
  using Poly = BasicPolynomial<Field>;
  Poly::require_same_field(a, b);
  const Field& F = a.field();
  if (a.is_zero() && b.is_zero()) throw ParameterError("gcd of two zero polynomials");
  if (b.is_zero()) {
    const auto k = F.inv(a.leading());
    return {a.scaled(k), Poly::constant(F, k), Poly(F)};
  }
  if (a.is_zero()) {
    const auto k = F.inv(b.leading());
    return {b.scaled(k), Poly(F), Poly::constant(F, k)};
  }
  if (a.degree() == 0) {
    const auto k = F.inv(a.leading());
    return {Poly::one(F), Poly::constant(F, k), Poly(F)};
  }

  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(F), s1(F);
  Poly t0(F), t1 = Poly::one(F);
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const auto k = F.inv(r0.leading());
  return {r0.scaled(k), s0.scaled(k), t0.scaled(k)};
}

/// Horner evaluation.
template <class Field>
typename Field::Elem evaluate(const BasicPolynomial<Field>& a, const typename Field::Elem& x) {
  const Field& F = a.field();
  auto c = a.coefficients();
  typename Field::Elem acc = F.zero();
  for (std::size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), c[i]);
  return acc;
}

template <class Field>
BasicPolynomial<Field> derivative(const BasicPolynomial<Field>& a) {
  using Poly = BasicPolynomial<Field>;
  const Field& F = a.field();
  if (a.degree() < 1) return Poly(F);
  auto c = a.coefficients();
  typename Poly::storage_type out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = F.mul(c[i], F.from_int(static_cast<long>(i)));
  return Poly(F, std::move(out));
}

/// The public polynomial type: BigInt residues over any prime field.
using Polynomial = BasicPolynomial<BigField>;

/// Builds a polynomial from arbitrary integers, constant term first.
Polynomial make_polynomial(const FieldPtr& field, std::span<const BigInt> coeffs);

/// Coefficient i as a field element.
FieldElement coefficient_element(const Polynomial& a, std::size_t i);

FieldElement evaluate(const Polynomial& a, const FieldElement& x);

/// Lifts a polynomial onto the machine-word backend (p < 2^64) and back.
BasicPolynomial<WordField> to_word(const Polynomial& a, const WordField& field);
Polynomial to_big(const BasicPolynomial<WordField>& a, const BigField& field);

}  // namespace hecc

#endif  // HECC_POLY_HPP
