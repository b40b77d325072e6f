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


#ifndef HECC_DETAIL_CURVE_MODEL_HPP
#define HECC_DETAIL_CURVE_MODEL_HPP

#include "hecc/poly.hpp"

namespace hecc {

template <class Field>
struct CurveModel {
  Field field;
  int genus;
  BasicPolynomial<Field> f;
  BasicPolynomial<Field> h;
};

/// Reduced divisor (u, v): u monic, deg v < deg u <= g, u | v^2 + v h - f.
template <class Field>
struct BasicMumford {
  BasicPolynomial<Field> u;
  BasicPolynomial<Field> v;

  bool is_identity() const noexcept { return u.is_one(); }
  /// Weight of the divisor, i.e. deg u.
  int weight() const noexcept { return u.degree(); }

  friend bool operator==(const BasicMumford&, const BasicMumford&) = default;
};

}  // namespace hecc

#endif  // HECC_DETAIL_CURVE_MODEL_HPP
