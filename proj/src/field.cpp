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

#include "hecc/field.hpp"

namespace hecc {

std::shared_ptr<const PrimeField> PrimeField::create(const BigInt& p) {
  if (p < 2 || !is_probable_prime(p)) {
    throw ParameterError("field modulus must be prime, got " + to_decimal(p));
  }
  return std::shared_ptr<const PrimeField>(new PrimeField(p));
}

PrimeField::PrimeField(const BigInt& p) : p_(p), bits_(bit_length(p)) {
  if (p_ == 2) return;
  odd_part_ = p_ - 1;
  while (mpz_even_p(odd_part_.get_mpz_t())) {
    odd_part_ >>= 1;
    ++two_adicity_;
  }
  if (two_adicity_ > 1) {
    non_residue_ = 2;
    while (legendre(non_residue_) != -1) ++non_residue_;
  }
}

BigInt PrimeField::reduce(const BigInt& a) const { return mod(a, p_); }

BigInt PrimeField::add(const BigInt& a, const BigInt& b) const {
  BigInt r = a + b;
  if (r >= p_) r -= p_;
  return r;
}

BigInt PrimeField::sub(const BigInt& a, const BigInt& b) const {
  BigInt r = a - b;
  if (sgn(r) < 0) r += p_;
  return r;
}

BigInt PrimeField::neg(const BigInt& a) const {
  if (sgn(a) == 0) return a;
  return p_ - a;
}

BigInt PrimeField::mul(const BigInt& a, const BigInt& b) const {
  BigInt r = a * b;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p_.get_mpz_t());
  return r;
}

BigInt PrimeField::inv(const BigInt& a) const {
  if (sgn(a) == 0) throw NotInvertibleError("zero has no inverse in F_" + to_decimal(p_));
  return inverse_mod(a, p_);
}

BigInt PrimeField::pow(const BigInt& a, const BigInt& e) const {
  if (sgn(e) < 0) throw ParameterError("negative exponent");
  BigInt r;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p_.get_mpz_t());
  return r;
}

int PrimeField::legendre(const BigInt& a) const {
  const BigInt r = reduce(a);
  if (sgn(r) == 0) return 0;
  if (p_ == 2) return 1;
  const BigInt e = pow(r, (p_ - 1) / 2);
  return e == 1 ? 1 : -1;
}

std::optional<BigInt> PrimeField::sqrt(const BigInt& a_in) const {
  const BigInt a = reduce(a_in);
  if (sgn(a) == 0 || p_ == 2) return a;
  if (legendre(a) != 1) return std::nullopt;

  BigInt root;
  if (two_adicity_ == 1) {
    // p = 3 (mod 4)
    root = pow(a, (p_ + 1) / 4);
  } else {
    // Tonelli-Shanks
    unsigned m = two_adicity_;
    BigInt c = pow(non_residue_, odd_part_);
    BigInt t = pow(a, odd_part_);
    root = pow(a, (odd_part_ + 1) / 2);
    while (t != 1) {
      unsigned i = 0;
      BigInt probe = t;
      while (probe != 1) {
        probe = mul(probe, probe);
        ++i;
      }
      BigInt b = c;
      for (unsigned k = 0; k + i + 1 < m; ++k) b = mul(b, b);
      m = i;
      c = mul(b, b);
      t = mul(t, c);
      root = mul(root, b);
    }
  }
  BigInt other = p_ - root;
  return other < root ? other : root;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->modulus() == b->modulus();
}

namespace {

const FieldPtr& common_field(const FieldElement& a, const FieldElement& b) {
  if (!same_field(a.field(), b.field())) {
    throw ParameterError("field elements have different moduli");
  }
  return a.field();
}

}  // namespace

FieldElement::FieldElement(FieldPtr field, const BigInt& value)
    : field_(std::move(field)) {
  if (!field_) throw ParameterError("field element without a field");
  value_ = field_->reduce(value);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const FieldPtr& f = common_field(a, b);
  return FieldElement(f, f->add(a.value_, b.value_), true);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const FieldPtr& f = common_field(a, b);
  return FieldElement(f, f->sub(a.value_, b.value_), true);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const FieldPtr& f = common_field(a, b);
  return FieldElement(f, f->mul(a.value_, b.value_), true);
}

FieldElement FieldElement::operator-() const {
  return FieldElement(field_, field_->neg(value_), true);
}

FieldElement FieldElement::inverse() const {
  return FieldElement(field_, field_->inv(value_), true);
}

FieldElement FieldElement::pow(const BigInt& e) const {
  return FieldElement(field_, field_->pow(value_, e), true);
}

int FieldElement::legendre() const { return field_->legendre(value_); }

std::optional<FieldElement> FieldElement::sqrt() const {
  auto root = field_->sqrt(value_);
  if (!root) return std::nullopt;
  return FieldElement(field_, std::move(*root), true);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return same_field(a.field_, b.field_) && a.value_ == b.value_;
}

WordField::Elem WordField::inv(Elem a) const {
  if (a == 0) throw NotInvertibleError("zero has no inverse");
  // Euclid on (p, a) tracking only |s|; the signs alternate.
  std::uint64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  bool negative = false;
  while (r1 != 0) {
    const std::uint64_t q = r0 / r1;
    const std::uint64_t r2 = r0 - q * r1;
    const std::uint64_t s2 = s0 + q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
    negative = !negative;
  }
  if (r0 != 1) throw NotInvertibleError("element is not invertible");
  return negative ? s0 : p_ - s0;
}

}  // namespace hecc
