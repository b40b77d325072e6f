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

#include "hecc/domain.hpp"

namespace hecc {

DomainParams::DomainParams(CurveParams curve, MumfordDivisor base, BigInt order)
    : jac_(std::move(curve)), base_(std::move(base)), order_(std::move(order)) {
  if (!jac_.contains(base_)) throw CurveError("base divisor is not on the curve");
  if (base_.is_identity()) throw CurveError("base divisor is the identity");
  if (order_ < 2 || !is_probable_prime(order_)) throw CurveError("group order r is not prime");
  if (!jac_.multiply(order_, base_).is_identity()) throw CurveError("r * R is not the identity");
}

}  // namespace hecc
