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

#ifndef HECC_DOMAIN_HPP
#define HECC_DOMAIN_HPP

#include "hecc/jacobian.hpp"

namespace hecc {

/// A curve together with a base divisor of known prime order. The order is
/// supplied by the caller; nothing here counts points.
class DomainParams {
 public:
  /// Throws CurveError unless base is a non-identity member of the Jacobian,
  /// order is prime, and order * base is the identity.
  DomainParams(CurveParams curve, MumfordDivisor base, BigInt order);

  const CurveParams& curve() const noexcept { return jac_.curve(); }
  const Jacobian& jacobian() const noexcept { return jac_; }
  const MumfordDivisor& base() const noexcept { return base_; }
  const BigInt& order() const noexcept { return order_; }
  /// Byte width of fixed-width scalars modulo the order.
  std::size_t scalar_width() const { return byte_length(order_); }

  friend bool operator==(const DomainParams& a, const DomainParams& b) {
    return a.curve() == b.curve() && a.base_ == b.base_ && a.order_ == b.order_;
  }

 private:
  Jacobian jac_;
  MumfordDivisor base_;
  BigInt order_;
};

}  // namespace hecc

#endif  // HECC_DOMAIN_HPP
