// Copyright 2026 The HPDA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>

namespace hpda {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kOk = 0,
  kSemanticFailure = 1,  // invalid array or decoding failure
  kUsageError = 2,       // bad flags, parameters or unparseable input
  kArtifactError = 3,    // an input array that does not verify
};

/// Runs one command line. All output goes to `out` and `err`; files named
/// by --out are written directly.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hpda
