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

#include "hecc/bigint.hpp"

#include <cctype>

#include "hecc/errors.hpp"

namespace hecc {

std::size_t bit_length(const BigInt& n) {
  if (sgn(n) == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

std::size_t byte_length(const BigInt& n) {
  const std::size_t bits = bit_length(n);
  return bits == 0 ? 1 : (bits + 7) / 8;
}

Bytes to_bytes_be(const BigInt& n, std::size_t width) {
  if (sgn(n) < 0) throw ParameterError("to_bytes_be: negative integer");
  const std::size_t needed = (bit_length(n) + 7) / 8;
  if (needed > width) throw ParameterError("to_bytes_be: integer does not fit in width");
  Bytes out(width, 0);
  if (needed == 0) return out;
  std::size_t written = 0;
  mpz_export(out.data() + (width - needed), &written, 1, 1, 1, 0, n.get_mpz_t());
  return out;
}

BigInt from_bytes_be(std::span<const std::uint8_t> bytes) {
  BigInt n;
  if (!bytes.empty()) mpz_import(n.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  return n;
}

BigInt mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  // s*a + t*m = g, tracked on the a side only
  BigInt r0 = mod(a, m), r1 = m;
  BigInt s0 = 1, s1 = 0;
  while (sgn(r1) != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0 != 1) throw NotInvertibleError("inverse_mod: element is not invertible");
  return mod(s0, m);
}

BigInt isqrt(const BigInt& n) {
  if (sgn(n) < 0) throw ParameterError("isqrt: negative argument");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_probable_prime(const BigInt& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

bool fits_u64(const BigInt& n) { return sgn(n) >= 0 && bit_length(n) <= 64; }

std::uint64_t to_u64(const BigInt& n) {
  if (!fits_u64(n)) throw ParameterError("to_u64: value out of range");
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, n.get_mpz_t());
  return v;
}

BigInt from_u64(std::uint64_t v) {
  BigInt n;
  mpz_import(n.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return n;
}

BigInt parse_decimal(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && text[0] == '-') i = 1;
  if (i == text.size()) throw FormatError("expected a decimal integer, got '" + std::string(text) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw FormatError("expected a decimal integer, got '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(text), 10);
}

std::string to_decimal(const BigInt& n) { return n.get_str(10); }

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw FormatError("hex string has odd length");
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int hi = hex_value(hex[2 * i]);
    const int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw FormatError("invalid hex digit");
    out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return out;
}

}  // namespace hecc
