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

#include "hecc/random.hpp"

#include <openssl/rand.h>

#include "hecc/errors.hpp"

namespace hecc {

namespace {

// Rejection sampling over [0, span) from a byte generator.
template <class FillBytes>
BigInt uniform_range(const BigInt& lo, const BigInt& hi, FillBytes&& fill) {
  if (hi < lo) throw ParameterError("empty sampling range");
  const BigInt span = hi - lo + 1;
  const std::size_t bits = bit_length(span - 1);
  if (bits == 0) return lo;
  const std::size_t nbytes = (bits + 7) / 8;
  const auto top_mask = static_cast<std::uint8_t>(0xff >> (8 * nbytes - bits));
  Bytes buf(nbytes);
  for (;;) {
    fill(buf);
    buf[0] &= top_mask;
    BigInt candidate = from_bytes_be(buf);
    if (candidate < span) return lo + candidate;
  }
}

}  // namespace

BigInt SystemScalarSource::draw(const BigInt& lo, const BigInt& hi) {
  return uniform_range(lo, hi, [](Bytes& buf) {
    if (RAND_bytes(buf.data(), static_cast<int>(buf.size())) != 1) {
      throw Error("system random generator failed");
    }
  });
}

BigInt SeededScalarSource::draw(const BigInt& lo, const BigInt& hi) {
  return uniform_range(lo, hi, [this](Bytes& buf) {
    for (std::size_t i = 0; i < buf.size(); i += 8) {
      std::uint64_t word = engine_();
      for (std::size_t k = 0; k < 8 && i + k < buf.size(); ++k) {
        buf[i + k] = static_cast<std::uint8_t>(word >> (8 * k));
      }
    }
  });
}

BigInt ScriptedScalarSource::draw(const BigInt& lo, const BigInt& hi) {
  if (script_.empty()) throw ParameterError("scripted scalar source exhausted");
  BigInt v = std::move(script_.front());
  script_.pop_front();
  if (v < lo || v > hi) {
    throw ParameterError("scripted value " + to_decimal(v) + " outside [" + to_decimal(lo) + ", " +
                         to_decimal(hi) + "]");
  }
  return v;
}

}  // namespace hecc
