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

// The `hecc` command line, runnable in-process for tests.
//
//   keygen        --domain D --out-secret SK --out-public PK
//   dh            --domain D --secret SK --peer PK --out SHARED
//   encrypt       --domain D --public PK --in MSG --out CT
//   decrypt       --domain D --secret SK --in CT --out MSG
//   sign          --domain D --secret SK --in MSG --out SIG [--deterministic]
//   verify        --domain D --public PK --in MSG --sig SIG
//   curve-info    --domain D
//   exchange-demo --domain D --in DOC --workdir W
//
// Hidden: --make-test-domain OUT --p P --f COEFFS [--h COEFFS] [--genus G]
// builds a domain for a tiny curve from exhaustive enumeration.
//
// Outputs are written to a temporary file and renamed into place, so a
// failing command leaves no partial file behind.

#ifndef HECC_CLI_HPP
#define HECC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hecc::cli {

enum ExitCode : int {
  kOk = 0,
  kRejected = 1,  // signature rejected or ciphertext does not decrypt
  kUsage = 2,     // bad arguments, unreadable or malformed input
};

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hecc::cli

#endif  // HECC_CLI_HPP
