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

#include "hecc/codec.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace hecc::codec {

std::string_view kind_name(ArtifactKind kind) {
  switch (kind) {
    case ArtifactKind::field_element: return "field element";
    case ArtifactKind::polynomial: return "polynomial";
    case ArtifactKind::divisor: return "divisor";
    case ArtifactKind::public_key: return "public key";
    case ArtifactKind::secret_key: return "secret key";
    case ArtifactKind::ciphertext: return "ciphertext";
    case ArtifactKind::signature: return "signature";
    case ArtifactKind::domain_params: return "domain parameters";
  }
  return "artifact";
}

void ByteWriter::put_u32(std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out_.push_back(static_cast<std::uint8_t>(v >> shift));
}

void ByteWriter::put_u64(std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) out_.push_back(static_cast<std::uint8_t>(v >> shift));
}

void ByteReader::fail(const std::string& what) const {
  throw FormatError(std::string(kind_name(kind_)) + ": " + what);
}

std::span<const std::uint8_t> ByteReader::get(std::size_t n) {
  if (remaining() < n) fail("truncated input");
  auto out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

std::uint8_t ByteReader::get_u8() { return get(1)[0]; }

std::uint32_t ByteReader::get_u32() {
  std::uint32_t v = 0;
  for (std::uint8_t b : get(4)) v = v << 8 | b;
  return v;
}

std::uint64_t ByteReader::get_u64() {
  std::uint64_t v = 0;
  for (std::uint8_t b : get(8)) v = v << 8 | b;
  return v;
}

void ByteReader::expect_end() const {
  if (remaining() != 0) fail("trailing bytes");
}

void write_field_element(ByteWriter& w, const BigInt& value, const PrimeField& field) {
  w.put(to_bytes_be(value, field.byte_width()));
}

BigInt read_field_element(ByteReader& r, const PrimeField& field) {
  BigInt v = from_bytes_be(r.get(field.byte_width()));
  if (v >= field.modulus()) r.fail("non-canonical field element");
  return v;
}

void write_polynomial(ByteWriter& w, const Polynomial& a) {
  const auto coeffs = a.coefficients();
  if (coeffs.size() > 255) throw ParameterError("polynomial degree too large to encode");
  w.put_u8(static_cast<std::uint8_t>(coeffs.size()));
  for (const BigInt& c : coeffs) write_field_element(w, c, *a.field().prime_field());
}

Polynomial read_polynomial(ByteReader& r, const BigField& field) {
  const std::size_t n = r.get_u8();
  Polynomial::storage_type coeffs;
  coeffs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) coeffs.push_back(read_field_element(r, *field.prime_field()));
  if (n > 0 && sgn(coeffs.back()) == 0) r.fail("polynomial has a zero leading coefficient");
  return Polynomial(field, std::move(coeffs));
}

void write_divisor(ByteWriter& w, const MumfordDivisor& d) {
  write_polynomial(w, d.u);
  write_polynomial(w, d.v);
}

MumfordDivisor read_divisor(ByteReader& r, const CurveParams& curve) {
  MumfordDivisor d{read_polynomial(r, curve.model().field), read_polynomial(r, curve.model().field)};
  if (!d.u.is_monic()) r.fail("u is not monic");
  if (d.v.degree() >= d.u.degree()) r.fail("deg v >= deg u");
  if (d.u.degree() > curve.genus()) r.fail("deg u exceeds the genus");
  if (!Jacobian(curve).contains(d)) r.fail("u does not divide v^2 + v h - f");
  return d;
}

Bytes encode_field_element(const FieldElement& x) {
  ByteWriter w;
  write_field_element(w, x.value(), *x.field());
  return std::move(w).take();
}

FieldElement decode_field_element(std::span<const std::uint8_t> bytes, const FieldPtr& field) {
  ByteReader r(bytes, ArtifactKind::field_element);
  BigInt v = read_field_element(r, *field);
  r.expect_end();
  return FieldElement(field, v);
}

Bytes encode_polynomial(const Polynomial& a) {
  ByteWriter w;
  write_polynomial(w, a);
  return std::move(w).take();
}

Polynomial decode_polynomial(std::span<const std::uint8_t> bytes, const FieldPtr& field) {
  ByteReader r(bytes, ArtifactKind::polynomial);
  Polynomial a = read_polynomial(r, BigField(field));
  r.expect_end();
  return a;
}

Bytes encode_divisor(const MumfordDivisor& d) {
  ByteWriter w;
  write_divisor(w, d);
  return std::move(w).take();
}

MumfordDivisor decode_divisor(std::span<const std::uint8_t> bytes, const CurveParams& curve) {
  ByteReader r(bytes, ArtifactKind::divisor);
  MumfordDivisor d = read_divisor(r, curve);
  r.expect_end();
  return d;
}

Bytes encode_scalar(const BigInt& s, const DomainParams& dp) { return to_bytes_be(s, dp.scalar_width()); }

Bytes encode_public_key(const MumfordDivisor& pk) { return encode_divisor(pk); }

MumfordDivisor decode_public_key(std::span<const std::uint8_t> bytes, const DomainParams& dp) {
  ByteReader r(bytes, ArtifactKind::public_key);
  MumfordDivisor d = read_divisor(r, dp.curve());
  r.expect_end();
  return d;
}

Bytes encode_secret_key(const BigInt& a, const DomainParams& dp) { return encode_scalar(a, dp); }

BigInt decode_secret_key(std::span<const std::uint8_t> bytes, const DomainParams& dp) {
  ByteReader r(bytes, ArtifactKind::secret_key);
  BigInt a = from_bytes_be(r.get(dp.scalar_width()));
  r.expect_end();
  if (a < 1 || a >= dp.order()) r.fail("secret scalar outside [1, r-1]");
  return a;
}

Bytes encode_signature(const Signature& sig, const DomainParams& dp) {
  ByteWriter w;
  write_divisor(w, sig.commitment);
  w.put(encode_scalar(sig.s, dp));
  return std::move(w).take();
}

Signature read_signature(ByteReader& r, const DomainParams& dp) {
  Signature sig{read_divisor(r, dp.curve()), 0};
  sig.s = from_bytes_be(r.get(dp.scalar_width()));
  if (sig.s >= dp.order()) r.fail("signature scalar is not reduced modulo r");
  return sig;
}

Signature decode_signature(std::span<const std::uint8_t> bytes, const DomainParams& dp) {
  ByteReader r(bytes, ArtifactKind::signature);
  Signature sig = read_signature(r, dp);
  r.expect_end();
  return sig;
}

Bytes encode_ciphertext(const Ciphertext& ct) {
  ByteWriter w;
  w.put(std::span(reinterpret_cast<const std::uint8_t*>(kCiphertextMagic.data()), kCiphertextMagic.size()));
  w.put_u8(kCiphertextVersion);
  w.put_u64(ct.plaintext_length);
  if (ct.chunks.size() > 0xffffffffu) throw ParameterError("too many ciphertext chunks");
  w.put_u32(static_cast<std::uint32_t>(ct.chunks.size()));
  for (const CipherBlock& b : ct.chunks) {
    write_divisor(w, b.c1);
    write_divisor(w, b.c2);
  }
  return std::move(w).take();
}

Ciphertext decode_ciphertext(std::span<const std::uint8_t> bytes, const DomainParams& dp) {
  ByteReader r(bytes, ArtifactKind::ciphertext);
  const auto magic = r.get(kCiphertextMagic.size());
  if (!std::equal(magic.begin(), magic.end(), kCiphertextMagic.begin())) r.fail("bad magic");
  if (r.get_u8() != kCiphertextVersion) r.fail("unsupported version");
  Ciphertext ct;
  ct.plaintext_length = r.get_u64();
  const std::uint32_t count = r.get_u32();
  // Each chunk takes at least four count bytes, so a short buffer fails early.
  if (static_cast<std::uint64_t>(count) * 4 > r.remaining()) r.fail("truncated input");
  ct.chunks.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    MumfordDivisor c1 = read_divisor(r, dp.curve());
    MumfordDivisor c2 = read_divisor(r, dp.curve());
    ct.chunks.push_back({std::move(c1), std::move(c2)});
  }
  r.expect_end();
  return ct;
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<BigInt> parse_coefficients(const std::string& value, const char* key) {
  std::vector<BigInt> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    if (t.empty()) throw FormatError(std::string("domain file: empty coefficient in '") + key + "'");
    out.push_back(parse_decimal(t));
  }
  if (out.empty()) throw FormatError(std::string("domain file: no coefficients for '") + key + "'");
  return out;
}

std::string format_coefficients(const Polynomial& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const BigInt& c : a.coefficients()) {
    if (!out.empty()) out += ",";
    out += to_decimal(c);
  }
  return out;
}

}  // namespace

std::string write_domain_file(const DomainParams& dp) {
  const CurveParams& c = dp.curve();
  std::string out;
  out += "p = " + to_decimal(c.p()) + "\n";
  out += "genus = " + std::to_string(c.genus()) + "\n";
  out += "f = " + format_coefficients(c.f()) + "\n";
  out += "h = " + format_coefficients(c.h()) + "\n";
  out += "r = " + to_decimal(dp.order()) + "\n";
  out += "R = " + to_hex(encode_divisor(dp.base())) + "\n";
  return out;
}

DomainParams read_domain_file(std::string_view text) {
  static const char* const kKeys[] = {"p", "genus", "f", "h", "r", "R"};
  std::map<std::string, std::string> values;
  std::stringstream ss{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw FormatError("domain file line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string value = trim(std::string_view(t).substr(eq + 1));
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
      throw FormatError("domain file line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (!values.emplace(key, value).second) {
      throw FormatError("domain file line " + std::to_string(line_no) + ": repeated key '" + key + "'");
    }
  }
  for (const char* key : kKeys) {
    if (!values.count(key)) throw FormatError(std::string("domain file: missing key '") + key + "'");
  }

  const BigInt p = parse_decimal(values["p"]);
  if (p < 2 || !is_probable_prime(p)) throw CurveError("domain file: p is not a prime");
  const BigInt genus = parse_decimal(values["genus"]);
  if (genus < 1 || genus > 64) throw CurveError("domain file: unsupported genus");
  const auto f = parse_coefficients(values["f"], "f");
  const auto h = parse_coefficients(values["h"], "h");
  const CurveParams curve = make_curve(p, static_cast<int>(genus.get_si()), f, h);
  const BigInt r = parse_decimal(values["r"]);
  MumfordDivisor base = decode_divisor(from_hex(values["R"]), curve);
  return DomainParams(curve, std::move(base), r);
}

}  // namespace hecc::codec
