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

#ifndef HECC_ERRORS_HPP
#define HECC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hecc {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent or out-of-domain parameters (mismatched moduli, bad ranges).
class ParameterError : public Error {
 public:
  using Error::Error;
};

class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

/// Curve or domain parameters that violate their invariants.
class CurveError : public Error {
 public:
  using Error::Error;
};

/// A Mumford pair that is not a reduced divisor of the bound curve.
class InvalidDivisorError : public Error {
 public:
  using Error::Error;
};

/// Malformed byte strings and text files.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Message embedding could not place a block on the curve.
class EncodingError : public Error {
 public:
  using Error::Error;
};

/// Brute-force routines refuse inputs above their size guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

class InvalidPeerError : public Error {
 public:
  using Error::Error;
};

class InvalidCiphertextError : public Error {
 public:
  using Error::Error;
};

/// Decryption produced group elements that do not decode as message blocks.
class DecryptionError : public Error {
 public:
  using Error::Error;
};

}  // namespace hecc

#endif  // HECC_ERRORS_HPP
