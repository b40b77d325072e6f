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

// Generates the demo domain: y^2 = x^5 + b over F_p with p = 2, 3 (mod 5).
// For such p the Jacobian order is p^2 + 1, always divisible by 10, and p
// is picked so that r = (p^2 + 1) / 10 is prime. The curve is supersingular:
// fine for exercising the protocols, weak for real use.
//
//   hecc-demo-domain [--bits N] [--b B] [--seed S] [--out FILE]

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hecc/codec.hpp"
#include "hecc/domain.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate a supersingular genus-2 demo domain"};
  unsigned bits = 64;
  long b = 3;
  std::uint64_t seed = 1;
  std::string out;
  app.add_option("--bits", bits, "Bit length of p")->check(CLI::Range(32u, 512u));
  app.add_option("--b", b, "Constant term of f");
  app.add_option("--seed", seed, "Seed for the base-point draw");
  app.add_option("--out", out, "Output file (default: stdout)");
  CLI11_PARSE(app, argc, argv);

  using namespace hecc;
  BigInt p = (BigInt(1) << bits) - 1;
  for (;; p -= 2) {
    const unsigned long residue = mpz_fdiv_ui(p.get_mpz_t(), 5);
    if (residue != 2 && residue != 3) continue;
    if (!is_probable_prime(p)) continue;
    if (is_probable_prime((p * p + 1) / 10)) break;
  }
  const BigInt r = (p * p + 1) / 10;

  const std::vector<BigInt> f{b, 0, 0, 0, 0, 1};
  const CurveParams curve = make_curve(p, 2, f, {});
  const Jacobian jac(curve);
  SeededScalarSource rng(seed);
  MumfordDivisor base = jac.identity();
  while (base.is_identity()) base = jac.multiply(10, jac.random_element(rng));
  const DomainParams dp(curve, base, r);

  const std::string text = "# y^2 = x^5 + " + std::to_string(b) + ", #J = p^2 + 1 = 10r (supersingular, demo only)\n" +
                           codec::write_domain_file(dp);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream(out) << text;
  }
  return 0;
}
