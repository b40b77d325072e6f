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

#ifndef HECC_RANDOM_HPP
#define HECC_RANDOM_HPP

#include <cstdint>
#include <deque>
#include <random>
#include <vector>

#include "hecc/bigint.hpp"

namespace hecc {

/// Caller-owned source of uniformly distributed integers. Implementations are
/// stateful and must not be shared between threads without coordination.
class ScalarSource {
 public:
  virtual ~ScalarSource() = default;

  /// Uniform integer in the closed range [lo, hi]; requires lo <= hi.
  virtual BigInt draw(const BigInt& lo, const BigInt& hi) = 0;
};

/// Operating-system entropy through OpenSSL's CSPRNG. Use for keys and nonces.
class SystemScalarSource final : public ScalarSource {
 public:
  BigInt draw(const BigInt& lo, const BigInt& hi) override;
};

/// Reproducible Mersenne-Twister stream for tests and simulations.
class SeededScalarSource final : public ScalarSource {
 public:
  explicit SeededScalarSource(std::uint64_t seed) : engine_(seed) {}
  BigInt draw(const BigInt& lo, const BigInt& hi) override;

 private:
  std::mt19937_64 engine_;
};

/// Replays a fixed script of values, used to pin keys and nonces in tests.
/// Throws ParameterError when the script runs out or a value lies outside the
/// requested range.
class ScriptedScalarSource final : public ScalarSource {
 public:
  explicit ScriptedScalarSource(std::vector<BigInt> script) : script_(script.begin(), script.end()) {}
  BigInt draw(const BigInt& lo, const BigInt& hi) override;
  std::size_t remaining() const noexcept { return script_.size(); }

 private:
  std::deque<BigInt> script_;
};

}  // namespace hecc

#endif  // HECC_RANDOM_HPP
