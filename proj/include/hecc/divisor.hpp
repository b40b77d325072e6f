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

// Divisors as formal sums of points, and conversion to and from Mumford form.
// This representation is for inspection and testing; the group law works on
// Mumford pairs only.

#ifndef HECC_DIVISOR_HPP
#define HECC_DIVISOR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hecc/jacobian.hpp"

namespace hecc {

class PointOnCurve {
 public:
  static PointOnCurve infinity() { return PointOnCurve(); }
  PointOnCurve(FieldElement x, FieldElement y) : xy_(std::in_place, std::move(x), std::move(y)) {}

  bool is_infinity() const noexcept { return !xy_.has_value(); }
  /// Preconditions: affine point.
  const FieldElement& x() const { return xy_->first; }
  const FieldElement& y() const { return xy_->second; }

  friend bool operator==(const PointOnCurve& a, const PointOnCurve& b);
  /// Infinity first, then by (x, y) residue.
  friend bool operator<(const PointOnCurve& a, const PointOnCurve& b);

 private:
  PointOnCurve() = default;
  std::optional<std::pair<FieldElement, FieldElement>> xy_;
};

bool on_curve(const PointOnCurve& P, const CurveParams& c);

/// The involution (x, y) -> (x, -y - h(x)); infinity is fixed. Throws
/// ParameterError for a point off the curve.
PointOnCurve opposite_point(const PointOnCurve& P, const CurveParams& c);

/// Affine point equal to its opposite.
bool is_special(const PointOnCurve& P, const CurveParams& c);

class ExplicitDivisor {
 public:
  using Terms = std::map<PointOnCurve, std::int64_t>;

  ExplicitDivisor() = default;

  /// Adds m * [P]; terms that cancel to zero are dropped.
  ExplicitDivisor& add_term(const PointOnCurve& P, std::int64_t m);

  std::int64_t degree() const;
  std::int64_t order_at(const PointOnCurve& P) const;
  std::vector<PointOnCurve> support() const;
  const Terms& terms() const noexcept { return terms_; }

  friend bool operator==(const ExplicitDivisor&, const ExplicitDivisor&) = default;

 private:
  Terms terms_;
};

/// Affine multiplicities non-negative, no opposite pair in the support,
/// special points at most once, infinity balancing the affine weight.
bool is_semi_reduced(const ExplicitDivisor& D, const CurveParams& c);
/// Semi-reduced with affine weight at most g.
bool is_reduced(const ExplicitDivisor& D, const CurveParams& c);

/// u = prod (x - x_i)^m_i and v the interpolating branch (Hensel-lifted at
/// repeated points). Throws InvalidDivisorError for non-reduced input.
MumfordDivisor explicit_to_mumford(const ExplicitDivisor& D, const CurveParams& c);

/// The point sum when u splits over F_p; nullopt when it does not. Throws
/// InvalidDivisorError for invalid input, GuardError when deg u > 2 and p is
/// too large for exhaustive root search.
std::optional<ExplicitDivisor> mumford_to_explicit(const MumfordDivisor& D, const CurveParams& c);

}  // namespace hecc

#endif  // HECC_DIVISOR_HPP
