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

// Brute-force ground truth for small curves.
//
// Point and divisor enumeration run on plain 64-bit integers with their own
// polynomial helpers, so they share no arithmetic with the Cantor kernel
// they are used to check.

#ifndef HECC_ORACLE_HPP
#define HECC_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hecc/divisor.hpp"
#include "hecc/domain.hpp"

namespace hecc::oracle {

inline constexpr std::uint64_t kMaxPointFieldSize = 1u << 20;
inline constexpr std::uint64_t kMaxDivisorSearch = 10'000'000;

/// All affine points and infinity (first). Throws GuardError for p > 2^20.
std::vector<PointOnCurve> enumerate_points(const CurveParams& c);

class EnumeratedGroup {
 public:
  EnumeratedGroup(CurveParams curve, std::vector<MumfordDivisor> elements);

  const CurveParams& curve() const noexcept { return curve_; }
  /// Sorted by deg u, then u coefficients, then v coefficients.
  const std::vector<MumfordDivisor>& elements() const noexcept { return elements_; }
  std::uint64_t order() const noexcept { return elements_.size(); }

  std::optional<std::size_t> index_of(const MumfordDivisor& d) const;
  bool contains(const MumfordDivisor& d) const { return index_of(d).has_value(); }

 private:
  CurveParams curve_;
  std::vector<MumfordDivisor> elements_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Every (u, v) with u monic, deg v < deg u <= g, u | v^2 + v h - f. Throws
/// GuardError when p^(2g) > 10^7.
EnumeratedGroup enumerate_reduced_divisors(const CurveParams& c);

std::uint64_t group_order_bruteforce(const CurveParams& c);

/// Least n >= 1 with n D = identity, found by repeated addition.
std::uint64_t element_order(const MumfordDivisor& d, const EnumeratedGroup& group);

/// Largest prime factor of n >= 2, by trial division.
std::uint64_t largest_prime_factor(std::uint64_t n);

/// R = (N / r) D for the first enumerated D where that is not the identity,
/// r the largest prime factor of N. Throws ParameterError when N < 2.
DomainParams make_prime_order_domain(const EnumeratedGroup& group);

/// One line per element: hex divisor encoding.
std::string enumeration_report(const EnumeratedGroup& group);

/// Short Weierstrass curve y^2 = x^3 + a x + b over F_p, p < 2^31.
struct EllipticCurve {
  std::int64_t p;
  std::int64_t a;
  std::int64_t b;
};

struct EcPoint {
  bool infinity = true;
  std::int64_t x = 0;
  std::int64_t y = 0;

  static EcPoint at_infinity() { return {}; }
  static EcPoint affine(std::int64_t x, std::int64_t y) { return {false, x, y}; }
  friend bool operator==(const EcPoint&, const EcPoint&) = default;
};

bool ec_on_curve(const EcPoint& P, const EllipticCurve& e);
std::vector<EcPoint> ec_points(const EllipticCurve& e);
/// Chord-tangent addition. Throws ParameterError for points off the curve.
EcPoint ec_add(const EcPoint& P, const EcPoint& Q, const EllipticCurve& e);

/// [ceil((sqrt p - 1)^(2g)), floor((sqrt p + 1)^(2g))] in exact integers.
std::pair<BigInt, BigInt> hasse_weil_interval(const BigInt& p, int genus);

}  // namespace hecc::oracle

#endif  // HECC_ORACLE_HPP
