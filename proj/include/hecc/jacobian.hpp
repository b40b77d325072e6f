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

// Hyperelliptic curves y^2 + h(x) y = f(x) over F_p (p odd) and the group law
// on their Jacobians.
//
// Group elements are reduced divisors in Mumford form. Two elements are equal
// exactly when their (u, v) coefficients are equal, since the form is unique
// per divisor class. When p < 2^64 every group operation runs on the
// machine-word backend; results are converted back to BigInt coefficients.

#ifndef HECC_JACOBIAN_HPP
#define HECC_JACOBIAN_HPP

#include <memory>
#include <variant>
#include <vector>

#include "hecc/detail/cantor.hpp"
#include "hecc/field.hpp"
#include "hecc/poly.hpp"
#include "hecc/random.hpp"

namespace hecc {

using MumfordDivisor = BasicMumford<BigField>;

/// Throws CurveError unless: p is an odd prime, genus >= 1, f is monic of
/// degree 2g+1, deg h <= g, and f + h^2/4 is squarefree (nonsingular curve).
void validate_curve(int genus, const Polynomial& f, const Polynomial& h);

class CurveParams {
 public:
  /// Validates with validate_curve.
  CurveParams(int genus, Polynomial f, Polynomial h);

  const FieldPtr& field() const noexcept { return impl_->big.field.prime_field(); }
  const BigInt& p() const noexcept { return field()->modulus(); }
  int genus() const noexcept { return impl_->big.genus; }
  const Polynomial& f() const noexcept { return impl_->big.f; }
  const Polynomial& h() const noexcept { return impl_->big.h; }

  const CurveModel<BigField>& model() const noexcept { return impl_->big; }
  /// Word-backend mirror of the curve, present when p < 2^64.
  const CurveModel<WordField>* word_model() const noexcept {
    return impl_->word ? &*impl_->word : nullptr;
  }

  /// True when (x, y) satisfies the curve equation.
  bool contains_point(const FieldElement& x, const FieldElement& y) const;

  friend bool operator==(const CurveParams& a, const CurveParams& b);

 private:
  struct Impl {
    CurveModel<BigField> big;
    std::optional<CurveModel<WordField>> word;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Convenience builder from integer coefficient lists (constant term first).
CurveParams make_curve(const BigInt& p, int genus, std::span<const BigInt> f, std::span<const BigInt> h);

class Jacobian {
 public:
  explicit Jacobian(CurveParams curve) : curve_(std::move(curve)) {}

  const CurveParams& curve() const noexcept { return curve_; }

  MumfordDivisor identity() const;

  /// Mumford membership: u monic, deg v < deg u <= g, u | v^2 + v h - f.
  bool contains(const MumfordDivisor& d) const;
  /// Throws InvalidDivisorError naming `what` when contains() is false.
  void require_member(const MumfordDivisor& d, const char* what = "divisor") const;

  MumfordDivisor add(const MumfordDivisor& a, const MumfordDivisor& b) const;
  MumfordDivisor negate(const MumfordDivisor& a) const;
  MumfordDivisor subtract(const MumfordDivisor& a, const MumfordDivisor& b) const;
  /// n * d for n >= 0 by left-to-right double-and-add.
  MumfordDivisor multiply(const BigInt& n, const MumfordDivisor& d) const;

  /// Weight-1 divisor (x - x0, y0) of an affine point on the curve.
  MumfordDivisor point_divisor(const FieldElement& x, const FieldElement& y) const;

  /// Sum of g random points, each drawn as: an index in [0, p] (p meaning the
  /// point at infinity), re-drawn until x admits a point, then a sign bit
  /// selecting the smaller (0) or larger (1) y-root. A test-surface
  /// generator, not a uniform sampler.
  MumfordDivisor random_element(ScalarSource& rng) const;

 private:
  CurveParams curve_;
};

/// Precomputed multiples d * 2^(4i) * base for repeated multiplication of
/// one base point.
class FixedBaseMultiplier {
 public:
  FixedBaseMultiplier(const Jacobian& jac, const MumfordDivisor& base, std::size_t max_bits);

  /// n * base for 0 <= n < 2^max_bits.
  MumfordDivisor multiply(const BigInt& n) const;

 private:
  template <class Field>
  using Table = std::vector<BasicMumford<Field>>;

  Jacobian jac_;
  std::size_t windows_;
  std::variant<Table<WordField>, Table<BigField>> table_;
};

}  // namespace hecc

#endif  // HECC_JACOBIAN_HPP
