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

// Prime field F_p.
//
// PrimeField is the immutable modulus context. FieldElement is the
// user-facing value type: it carries its field and refuses to combine with
// elements of a different modulus. The polynomial and Jacobian templates work
// on bare residues through one of two arithmetic policies:
//
//   BigField   residues are BigInt, any prime p
//   WordField  residues are uint64_t, p < 2^64
//
// Both policies expose the same member set (zero, one, add, sub, neg, mul,
// inv, is_zero) so the algorithms are written once.

#ifndef HECC_FIELD_HPP
#define HECC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>

#include "hecc/bigint.hpp"
#include "hecc/errors.hpp"

namespace hecc {

class PrimeField {
 public:
  /// Throws ParameterError unless p is a prime (p = 2 is accepted here; odd
  /// characteristic is enforced by curve validation).
  static std::shared_ptr<const PrimeField> create(const BigInt& p);

  const BigInt& modulus() const noexcept { return p_; }
  std::size_t bits() const noexcept { return bits_; }
  /// Width of the canonical big-endian element encoding.
  std::size_t byte_width() const noexcept { return (bits_ + 7) / 8; }

  BigInt reduce(const BigInt& a) const;
  BigInt add(const BigInt& a, const BigInt& b) const;
  BigInt sub(const BigInt& a, const BigInt& b) const;
  BigInt neg(const BigInt& a) const;
  BigInt mul(const BigInt& a, const BigInt& b) const;
  BigInt inv(const BigInt& a) const;
  /// a^0 = 1, including 0^0.
  BigInt pow(const BigInt& a, const BigInt& e) const;
  /// -1, 0 or +1 from Euler's criterion.
  int legendre(const BigInt& a) const;
  /// The numerically smaller square root, or nullopt for a non-residue.
  std::optional<BigInt> sqrt(const BigInt& a) const;

 private:
  explicit PrimeField(const BigInt& p);

  BigInt p_;
  std::size_t bits_;
  // p - 1 = odd_part * 2^two_adicity, and a fixed non-residue for Tonelli-Shanks.
  BigInt odd_part_;
  unsigned two_adicity_ = 0;
  BigInt non_residue_;
};

using FieldPtr = std::shared_ptr<const PrimeField>;

/// True when both handles describe the same modulus.
bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;

class FieldElement {
 public:
  /// Reduces `value` into [0, p).
  FieldElement(FieldPtr field, const BigInt& value);
  FieldElement(FieldPtr field, long value) : FieldElement(std::move(field), BigInt(value)) {}

  const FieldPtr& field() const noexcept { return field_; }
  const BigInt& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return sgn(value_) == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  /// Throws NotInvertibleError for zero.
  FieldElement inverse() const;
  FieldElement pow(const BigInt& e) const;
  int legendre() const;
  std::optional<FieldElement> sqrt() const;

  /// Equal residues over equal moduli.
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldElement(FieldPtr field, BigInt value, bool /*canonical*/)
      : field_(std::move(field)), value_(std::move(value)) {}

  FieldPtr field_;
  BigInt value_;
};

/// Arithmetic policy over BigInt residues.
class BigField {
 public:
  using Elem = BigInt;

  explicit BigField(FieldPtr field) : field_(std::move(field)) {}

  const FieldPtr& prime_field() const noexcept { return field_; }
  const BigInt& modulus() const noexcept { return field_->modulus(); }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return field_->reduce(BigInt(v)); }
  Elem add(const Elem& a, const Elem& b) const { return field_->add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return field_->sub(a, b); }
  Elem neg(const Elem& a) const { return field_->neg(a); }
  Elem mul(const Elem& a, const Elem& b) const { return field_->mul(a, b); }
  Elem inv(const Elem& a) const { return field_->inv(a); }
  static bool is_zero(const Elem& a) { return sgn(a) == 0; }
  static bool is_one(const Elem& a) { return a == 1; }

  friend bool operator==(const BigField& a, const BigField& b) noexcept {
    return same_field(a.field_, b.field_);
  }

 private:
  FieldPtr field_;
};

/// Arithmetic policy over machine-word residues; requires p < 2^64.
class WordField {
 public:
  using Elem = std::uint64_t;

  explicit WordField(std::uint64_t p) : p_(p), fold_(p > ~std::uint64_t{0} - (std::uint64_t{1} << 32) ? 0 - p : 0) {}

  std::uint64_t modulus() const noexcept { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const {
    if (v >= 0) return static_cast<std::uint64_t>(v) % p_;
    const std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) % p_;  // avoids LONG_MIN overflow
    return p_ - 1 - m;
  }
  Elem add(Elem a, Elem b) const { return a >= p_ - b ? a - (p_ - b) : a + b; }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    const unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
    if (fold_ != 0) {
      // p = 2^64 - c: fold the high word down as hi * c.
      std::uint64_t hi = static_cast<std::uint64_t>(t >> 64), lo = static_cast<std::uint64_t>(t);
      while (hi != 0) {
        const unsigned __int128 s = static_cast<unsigned __int128>(hi) * fold_ + lo;
        hi = static_cast<std::uint64_t>(s >> 64);
        lo = static_cast<std::uint64_t>(s);
      }
      return lo >= p_ ? lo - p_ : lo;
    }
#if defined(__x86_64__)
    // a, b < p keeps the high word below p, so divq cannot trap.
    std::uint64_t q, r;
    __asm__("divq %4"
            : "=a"(q), "=d"(r)
            : "a"(static_cast<std::uint64_t>(t)), "d"(static_cast<std::uint64_t>(t >> 64)), "rm"(p_)
            : "cc");
    return r;
#else
    return static_cast<std::uint64_t>(t % p_);
#endif
  }
  Elem inv(Elem a) const;
  static bool is_zero(Elem a) { return a == 0; }
  static bool is_one(Elem a) { return a == 1; }

  friend bool operator==(const WordField& a, const WordField& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
  std::uint64_t fold_;  // 2^64 - p for primes just below 2^64, else 0
};

}  // namespace hecc

#endif  // HECC_FIELD_HPP
