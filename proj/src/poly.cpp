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

#include "hecc/poly.hpp"

namespace hecc {

template class BasicPolynomial<BigField>;
template class BasicPolynomial<WordField>;

Polynomial make_polynomial(const FieldPtr& field, std::span<const BigInt> coeffs) {
  Polynomial::storage_type s;
  s.reserve(coeffs.size());
  for (const BigInt& c : coeffs) s.push_back(field->reduce(c));
  return Polynomial(BigField(field), std::move(s));
}

FieldElement coefficient_element(const Polynomial& a, std::size_t i) {
  return FieldElement(a.field().prime_field(), a.coefficient(i));
}

FieldElement evaluate(const Polynomial& a, const FieldElement& x) {
  if (!same_field(a.field().prime_field(), x.field())) {
    throw ParameterError("evaluation point from a different field");
  }
  return FieldElement(x.field(), evaluate(a, x.value()));
}

BasicPolynomial<WordField> to_word(const Polynomial& a, const WordField& field) {
  BasicPolynomial<WordField>::storage_type s;
  s.reserve(a.coefficients().size());
  for (const BigInt& c : a.coefficients()) s.push_back(to_u64(c));
  return BasicPolynomial<WordField>(field, std::move(s));
}

Polynomial to_big(const BasicPolynomial<WordField>& a, const BigField& field) {
  Polynomial::storage_type s;
  s.reserve(a.coefficients().size());
  for (std::uint64_t c : a.coefficients()) s.push_back(from_u64(c));
  return Polynomial(field, std::move(s));
}

}  // namespace hecc
