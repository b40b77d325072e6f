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

#include "hecc/jacobian.hpp"

#include <string>

namespace hecc {

namespace {

using WordDivisor = BasicMumford<WordField>;

WordDivisor to_word(const MumfordDivisor& d, const WordField& field) {
  return {to_word(d.u, field), to_word(d.v, field)};
}

MumfordDivisor to_big(const WordDivisor& d, const BigField& field) {
  return {to_big(d.u, field), to_big(d.v, field)};
}

}  // namespace

void validate_curve(int genus, const Polynomial& f, const Polynomial& h) {
  const BigInt& p = f.field().modulus();
  if (p == 2 || mpz_even_p(p.get_mpz_t())) throw CurveError("characteristic must be odd, got p = " + to_decimal(p));
  if (!(f.field() == h.field())) throw CurveError("f and h are over different fields");
  if (genus < 1) throw CurveError("genus must be at least 1");
  if (f.degree() != 2 * genus + 1) {
    throw CurveError("f must have degree 2g+1 = " + std::to_string(2 * genus + 1) + ", got " +
                     std::to_string(f.degree()));
  }
  if (!f.is_monic()) throw CurveError("f must be monic");
  if (h.degree() > genus) throw CurveError("h must have degree at most g");

  // (y + h/2)^2 = f + h^2/4 is smooth iff the right side is squarefree.
  const BigField& F = f.field();
  const Polynomial completed = f + (h * h).scaled(F.inv(F.from_int(4)));
  if (!xgcd(completed, derivative(completed)).gcd.is_one()) {
    throw CurveError("curve is singular: f + h^2/4 has a repeated root");
  }
}

CurveParams::CurveParams(int genus, Polynomial f, Polynomial h) {
  validate_curve(genus, f, h);
  auto impl = std::make_shared<Impl>(Impl{CurveModel<BigField>{f.field(), genus, f, h}, std::nullopt});
  const BigInt& p = f.field().modulus();
  if (fits_u64(p)) {
    const WordField wf(to_u64(p));
    impl->word = CurveModel<WordField>{wf, genus, hecc::to_word(f, wf), hecc::to_word(h, wf)};
  }
  impl_ = std::move(impl);
}

bool CurveParams::contains_point(const FieldElement& x, const FieldElement& y) const {
  if (!same_field(x.field(), field()) || !same_field(y.field(), field())) return false;
  return y * y + evaluate(h(), x) * y == evaluate(f(), x);
}

bool operator==(const CurveParams& a, const CurveParams& b) {
  return a.genus() == b.genus() && a.f() == b.f() && a.h() == b.h();
}

CurveParams make_curve(const BigInt& p, int genus, std::span<const BigInt> f, std::span<const BigInt> h) {
  const FieldPtr field = PrimeField::create(p);
  return CurveParams(genus, make_polynomial(field, f), make_polynomial(field, h));
}

MumfordDivisor Jacobian::identity() const { return detail::identity(curve_.model()); }

bool Jacobian::contains(const MumfordDivisor& d) const {
  const CurveModel<BigField>& model = curve_.model();
  if (!(d.u.field() == model.field) || !(d.v.field() == model.field)) return false;
  if (const auto* wm = curve_.word_model()) return detail::is_reduced_pair(*wm, to_word(d, wm->field));
  return detail::is_reduced_pair(model, d);
}

void Jacobian::require_member(const MumfordDivisor& d, const char* what) const {
  if (!contains(d)) throw InvalidDivisorError(std::string(what) + " is not a reduced divisor on the curve");
}

MumfordDivisor Jacobian::add(const MumfordDivisor& a, const MumfordDivisor& b) const {
  require_member(a);
  require_member(b);
  if (const auto* wm = curve_.word_model()) {
    return to_big(detail::add(*wm, to_word(a, wm->field), to_word(b, wm->field)), curve_.model().field);
  }
  return detail::add(curve_.model(), a, b);
}

MumfordDivisor Jacobian::negate(const MumfordDivisor& a) const {
  require_member(a);
  return detail::negate(curve_.model(), a);
}

MumfordDivisor Jacobian::subtract(const MumfordDivisor& a, const MumfordDivisor& b) const {
  return add(a, negate(b));
}

MumfordDivisor Jacobian::multiply(const BigInt& n, const MumfordDivisor& d) const {
  require_member(d);
  if (const auto* wm = curve_.word_model()) {
    return to_big(detail::multiply(*wm, n, to_word(d, wm->field)), curve_.model().field);
  }
  return detail::multiply(curve_.model(), n, d);
}

MumfordDivisor Jacobian::point_divisor(const FieldElement& x, const FieldElement& y) const {
  if (!curve_.contains_point(x, y)) throw InvalidDivisorError("point is not on the curve");
  const BigField& F = curve_.model().field;
  return {Polynomial::linear_root(F, x.value()), Polynomial::constant(F, y.value())};
}

MumfordDivisor Jacobian::random_element(ScalarSource& rng) const {
  const FieldPtr& field = curve_.field();
  const BigInt& p = field->modulus();
  const FieldElement two(field, 2);
  MumfordDivisor acc = identity();
  for (int i = 0; i < curve_.genus(); ++i) {
    for (;;) {
      const BigInt index = rng.draw(0, p);
      if (index == p) break;  // point at infinity contributes nothing
      const FieldElement x(field, index);
      const FieldElement hx = evaluate(curve_.h(), x);
      const FieldElement disc = hx * hx + FieldElement(field, 4) * evaluate(curve_.f(), x);
      const auto root = disc.sqrt();
      if (!root) continue;
      const FieldElement halve = two.inverse();
      FieldElement y1 = (-hx + *root) * halve;
      FieldElement y2 = (-hx - *root) * halve;
      if (y2.value() < y1.value()) std::swap(y1, y2);
      const bool larger = rng.draw(0, 1) == 1;
      acc = add(acc, point_divisor(x, larger ? y2 : y1));
      break;
    }
  }
  return acc;
}

namespace {

constexpr std::size_t kWindowBits = 4;
constexpr std::size_t kDigits = (1u << kWindowBits) - 1;

template <class Field>
std::vector<BasicMumford<Field>> build_table(const CurveModel<Field>& c, BasicMumford<Field> base,
                                             std::size_t windows) {
  std::vector<BasicMumford<Field>> table;
  table.reserve(windows * kDigits);
  for (std::size_t w = 0; w < windows; ++w) {
    BasicMumford<Field> acc = base;
    table.push_back(acc);
    for (std::size_t d = 2; d <= kDigits; ++d) {
      acc = detail::add(c, acc, base);
      table.push_back(acc);
    }
    base = detail::add(c, acc, base);  // 16 * base
  }
  return table;
}

template <class Field>
BasicMumford<Field> table_multiply(const CurveModel<Field>& c, const std::vector<BasicMumford<Field>>& table,
                                   std::size_t windows, const BigInt& n) {
  BasicMumford<Field> acc = detail::identity(c);
  for (std::size_t w = 0; w < windows; ++w) {
    unsigned digit = 0;
    for (std::size_t b = 0; b < kWindowBits; ++b) {
      if (mpz_tstbit(n.get_mpz_t(), w * kWindowBits + b)) digit |= 1u << b;
    }
    if (digit != 0) acc = detail::add(c, acc, table[w * kDigits + digit - 1]);
  }
  return acc;
}

}  // namespace

FixedBaseMultiplier::FixedBaseMultiplier(const Jacobian& jac, const MumfordDivisor& base, std::size_t max_bits)
    : jac_(jac), windows_((max_bits + kWindowBits - 1) / kWindowBits) {
  jac_.require_member(base, "base");
  const CurveParams& curve = jac_.curve();
  if (const auto* wm = curve.word_model()) {
    table_ = build_table(*wm, to_word(base, wm->field), windows_);
  } else {
    table_ = build_table(curve.model(), base, windows_);
  }
}

MumfordDivisor FixedBaseMultiplier::multiply(const BigInt& n) const {
  if (sgn(n) < 0 || bit_length(n) > windows_ * kWindowBits) {
    throw ParameterError("scalar outside the precomputed range");
  }
  const CurveParams& curve = jac_.curve();
  if (const auto* table = std::get_if<Table<WordField>>(&table_)) {
    return to_big(table_multiply(*curve.word_model(), *table, windows_, n), curve.model().field);
  }
  return table_multiply(curve.model(), std::get<Table<BigField>>(table_), windows_, n);
}

}  // namespace hecc
