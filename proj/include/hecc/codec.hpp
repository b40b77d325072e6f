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

// Canonical byte encodings. All integers are big-endian.
//
//   field element  exactly L = ceil(bits(p)/8) bytes, value < p
//   polynomial     count byte n, then n field elements, constant term first;
//                  the last element is nonzero (zero polynomial: n = 0)
//   divisor        polynomial(u) || polynomial(v)
//   scalar         exactly ceil(bits(r)/8) bytes
//   public key     divisor
//   secret key     scalar in [1, r-1]
//   signature      divisor(Q) || scalar(s)
//   ciphertext     "HECC1" || 0x01 || u64 plaintext length || u32 chunk count
//                  || chunk count * (divisor(C1) || divisor(C2))
//
// Decoders accept only canonical strings: re-encoding a decoded value gives
// back the input bytes. Every decoded divisor is checked for Mumford
// membership.

#ifndef HECC_CODEC_HPP
#define HECC_CODEC_HPP

#include <span>
#include <string>
#include <string_view>

#include "hecc/artifacts.hpp"
#include "hecc/domain.hpp"

namespace hecc::codec {

enum class ArtifactKind {
  field_element,
  polynomial,
  divisor,
  public_key,
  secret_key,
  ciphertext,
  signature,
  domain_params,
};

std::string_view kind_name(ArtifactKind kind);

inline constexpr std::string_view kCiphertextMagic = "HECC1";
inline constexpr std::uint8_t kCiphertextVersion = 0x01;

class ByteWriter {
 public:
  void put_u8(std::uint8_t b) { out_.push_back(b); }
  void put_u32(std::uint32_t v);
  void put_u64(std::uint64_t v);
  void put(std::span<const std::uint8_t> bytes) { out_.insert(out_.end(), bytes.begin(), bytes.end()); }
  Bytes take() && { return std::move(out_); }

 private:
  Bytes out_;
};

/// Cursor over an input buffer; every read past the end throws FormatError.
class ByteReader {
 public:
  ByteReader(std::span<const std::uint8_t> data, ArtifactKind kind) : data_(data), kind_(kind) {}

  std::uint8_t get_u8();
  std::uint32_t get_u32();
  std::uint64_t get_u64();
  std::span<const std::uint8_t> get(std::size_t n);
  std::size_t remaining() const noexcept { return data_.size() - pos_; }
  /// Throws FormatError if unread bytes remain.
  void expect_end() const;
  [[noreturn]] void fail(const std::string& what) const;

 private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
  ArtifactKind kind_;
};

void write_field_element(ByteWriter& w, const BigInt& value, const PrimeField& field);
BigInt read_field_element(ByteReader& r, const PrimeField& field);

void write_polynomial(ByteWriter& w, const Polynomial& a);
Polynomial read_polynomial(ByteReader& r, const BigField& field);

void write_divisor(ByteWriter& w, const MumfordDivisor& d);
MumfordDivisor read_divisor(ByteReader& r, const CurveParams& curve);

Bytes encode_field_element(const FieldElement& x);
FieldElement decode_field_element(std::span<const std::uint8_t> bytes, const FieldPtr& field);

Bytes encode_polynomial(const Polynomial& a);
Polynomial decode_polynomial(std::span<const std::uint8_t> bytes, const FieldPtr& field);

Bytes encode_divisor(const MumfordDivisor& d);
MumfordDivisor decode_divisor(std::span<const std::uint8_t> bytes, const CurveParams& curve);

Bytes encode_scalar(const BigInt& s, const DomainParams& dp);

Bytes encode_public_key(const MumfordDivisor& pk);
MumfordDivisor decode_public_key(std::span<const std::uint8_t> bytes, const DomainParams& dp);

Bytes encode_secret_key(const BigInt& a, const DomainParams& dp);
/// Rejects scalars outside [1, r-1].
BigInt decode_secret_key(std::span<const std::uint8_t> bytes, const DomainParams& dp);

Bytes encode_signature(const Signature& sig, const DomainParams& dp);
Signature decode_signature(std::span<const std::uint8_t> bytes, const DomainParams& dp);
/// Reads a signature from the front of a longer buffer.
Signature read_signature(ByteReader& r, const DomainParams& dp);

Bytes encode_ciphertext(const Ciphertext& ct);
Ciphertext decode_ciphertext(std::span<const std::uint8_t> bytes, const DomainParams& dp);

/// Line-oriented "key = value" text:
///   p = <decimal>
///   genus = <decimal>
///   f = <comma-separated decimal coefficients, constant term first>
///   h = <same; "0" for the zero polynomial>
///   r = <decimal>
///   R = <hex divisor encoding>
/// Blank lines and lines starting with '#' are ignored; unknown or repeated
/// keys are rejected. Invariant failures surface as CurveError.
std::string write_domain_file(const DomainParams& dp);
DomainParams read_domain_file(std::string_view text);

}  // namespace hecc::codec

#endif  // HECC_CODEC_HPP
