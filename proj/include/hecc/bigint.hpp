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

#ifndef HECC_BIGINT_HPP
#define HECC_BIGINT_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hecc {

using BigInt = mpz_class;
using Bytes = std::vector<std::uint8_t>;

/// Number of significant bits; 0 for 0. Sign is ignored.
std::size_t bit_length(const BigInt& n);

/// ceil(bit_length(n) / 8), at least 1.
std::size_t byte_length(const BigInt& n);

/// Big-endian, left-padded to exactly `width` bytes. Throws ParameterError if
/// `n` is negative or does not fit.
Bytes to_bytes_be(const BigInt& n, std::size_t width);

BigInt from_bytes_be(std::span<const std::uint8_t> bytes);

/// Least non-negative residue of a mod m (m > 0).
BigInt mod(const BigInt& a, const BigInt& m);

/// Inverse of a modulo m via extended Euclid; throws NotInvertibleError.
BigInt inverse_mod(const BigInt& a, const BigInt& m);

BigInt isqrt(const BigInt& n);

/// Miller-Rabin with enough rounds that a false positive is negligible.
bool is_probable_prime(const BigInt& n);

bool fits_u64(const BigInt& n);
std::uint64_t to_u64(const BigInt& n);
BigInt from_u64(std::uint64_t v);

/// Strict decimal parse (optional leading '-'); throws FormatError.
BigInt parse_decimal(std::string_view text);
std::string to_decimal(const BigInt& n);

std::string to_hex(std::span<const std::uint8_t> bytes);
/// Throws FormatError on odd length or non-hex characters.
Bytes from_hex(std::string_view hex);

}  // namespace hecc

#endif  // HECC_BIGINT_HPP
