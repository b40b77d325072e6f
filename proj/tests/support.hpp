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

// Shared fixtures and hand-rolled generators for the test binaries.

#ifndef HECC_TESTS_SUPPORT_HPP
#define HECC_TESTS_SUPPORT_HPP

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hecc/codec.hpp"
#include "hecc/divisor.hpp"
#include "hecc/domain.hpp"
#include "hecc/jacobian.hpp"
#include "hecc/oracle.hpp"
#include "hecc/protocols.hpp"

#ifndef HECC_TEST_DATA_DIR
#error "HECC_TEST_DATA_DIR must be defined"
#endif

namespace hecc::testing {

inline std::vector<BigInt> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

inline CurveParams curve(long p, std::initializer_list<long> f, std::initializer_list<long> h = {}, int genus = 2) {
  return make_curve(BigInt(p), genus, ints(f), ints(h));
}

/// y^2 = x^5 + 3x + 1 over F_7.
inline CurveParams f7_curve() { return curve(7, {1, 3, 0, 0, 0, 1}); }

/// The small curves the group-law suites run on; the F_13 one has h != 0.
inline std::vector<CurveParams> small_curves() {
  return {f7_curve(), curve(11, {2, 0, 1, 0, 0, 1}), curve(13, {1, 2, 0, 0, 0, 1}, {0, 1})};
}

inline std::string data_path(const std::string& name) { return std::string(HECC_TEST_DATA_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Prime-order domain over F_53 (#J = r = 3361), built by exhaustive enumeration.
inline DomainParams toy_domain() { return codec::read_domain_file(read_text(data_path("toy53.dom"))); }

/// Supersingular demo domain over a 64-bit prime, r of 125 bits.
inline DomainParams demo_domain() { return codec::read_domain_file(read_text(data_path("demo64.dom"))); }

inline FieldElement fe(const CurveParams& c, long v) { return FieldElement(c.field(), v); }

inline Polynomial poly(const FieldPtr& F, std::initializer_list<long> coeffs) {
  return Polynomial(BigField(F), coeffs);
}

inline MumfordDivisor mumford(const CurveParams& c, std::initializer_list<long> u, std::initializer_list<long> v) {
  return {poly(c.field(), u), poly(c.field(), v)};
}

/// Fixed-input artifacts on the demo domain, one "name = hex" line each,
/// followed by the domain file. Compared against tests/data/golden.txt.
inline std::string golden_fixture_text() {
  const DomainParams dp = demo_domain();
  std::string out;
  const auto line = [&](const std::string& key, const Bytes& b) { out += key + " = " + to_hex(b) + "\n"; };
  const KeyPair kp = keypair_from_secret(dp, BigInt("12345678901234567890123456789"));
  line("secret_key", codec::encode_secret_key(kp.secret, dp));
  line("public_key", codec::encode_public_key(kp.public_key));
  line("signature", codec::encode_signature(sign(as_bytes("golden"), kp, dp), dp));
  ScriptedScalarSource eph({BigInt(7), BigInt("99999999999999999999"), BigInt(3), BigInt(5)});
  line("ciphertext",
       codec::encode_ciphertext(elgamal_encrypt_bytes(as_bytes("golden fixture text"), kp.public_key, dp, eph)));
  line("hash_empty", to_bytes_be(hash_to_int({}), 20));
  out += codec::write_domain_file(dp);
  return out;
}

/// #J for a genus-2 curve over F_p from the point counts over F_p and F_p^2,
/// via the zeta function: a1 = N1 - p - 1, 2 a2 = N2 - p^2 - 1 + a1^2,
/// #J = L(1) = 1 + a1 + a2 + p a1 + p^2. Shares no code with the library.
inline std::int64_t genus2_order_from_zeta(std::int64_t p, const std::vector<std::int64_t>& f,
                                           const std::vector<std::int64_t>& h) {
  const auto md = [p](std::int64_t a) { return ((a % p) + p) % p; };
  // F_p^2 = F_p[t] / (t^2 - n), n a non-residue.
  std::int64_t n = 2;
  for (;; ++n) {
    std::int64_t acc = 1;
    for (std::int64_t i = 0; i < (p - 1) / 2; ++i) acc = acc * n % p;
    if (acc == p - 1) break;
  }
  struct E {
    std::int64_t a, b;
  };
  const auto mul = [&](E x, E y) { return E{md(x.a * y.a + md(x.b * y.b) * n), md(x.a * y.b + x.b * y.a)}; };
  const auto add = [&](E x, E y) { return E{md(x.a + y.a), md(x.b + y.b)}; };
  const auto eval = [&](const std::vector<std::int64_t>& c, E x) {
    E acc{0, 0};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = add(mul(acc, x), E{md(*it), 0});
    return acc;
  };
  const auto chi = [&](E x, std::int64_t q) {
    if (x.a == 0 && x.b == 0) return 0;
    E acc{1, 0};
    for (std::int64_t e = (q - 1) / 2; e > 0; e >>= 1, x = mul(x, x)) {
      if (e & 1) acc = mul(acc, x);
    }
    return acc.a == 1 ? 1 : -1;
  };
  const auto count = [&](std::int64_t bmax, std::int64_t q) {
    std::int64_t total = 1;  // one point at infinity
    for (std::int64_t a = 0; a < p; ++a) {
      for (std::int64_t b = 0; b < bmax; ++b) {
        const E x{a, b};
        const E hx = eval(h, x);
        const E disc = add(mul(hx, hx), mul(E{4, 0}, eval(f, x)));
        total += 1 + chi(disc, q);
      }
    }
    return total;
  };
  const std::int64_t n1 = count(1, p), n2 = count(p, p * p);
  const std::int64_t a1 = n1 - p - 1;
  const std::int64_t a2 = (n2 - p * p - 1 + a1 * a1) / 2;
  return 1 + a1 + a2 + p * a1 + p * p;
}

/// Deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed), scalars_(seed ^ 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }

  BigInt big_below(const BigInt& n) { return scalars_.draw(0, n - 1); }

  BigInt scalar(const DomainParams& dp) { return scalars_.draw(1, dp.order() - 1); }

  Bytes bytes(std::size_t n) {
    Bytes out(n);
    for (auto& b : out) b = static_cast<std::uint8_t>(below(256));
    return out;
  }

  Polynomial polynomial(const FieldPtr& F, int max_degree) {
    const int d = static_cast<int>(below(static_cast<std::uint64_t>(max_degree) + 2)) - 1;
    Polynomial::storage_type s;
    for (int i = 0; i <= d; ++i) s.push_back(big_below(F->modulus()));
    return Polynomial(BigField(F), std::move(s));
  }

  MumfordDivisor element(const Jacobian& jac) { return jac.random_element(scalars_); }

  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[below(xs.size())];
  }

  ScalarSource& source() { return scalars_; }

 private:
  std::mt19937_64 rng_;
  SeededScalarSource scalars_;
};

}  // namespace hecc::testing

#endif  // HECC_TESTS_SUPPORT_HPP
