// Copyright 2026 The cbcodes Authors
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
#include <string>
#include <string_view>
#include <vector>

#include "cbcodes/gf.hpp"
#include "cbcodes/multipoly.hpp"

namespace cbcodes {

/// Line-oriented variety description:
///
///   field p=<int> e=<int> [modulus=<c0,...,1>]
///   vars m=<int>
///   poly <expr>
///
/// `#` starts a comment. `field` and `vars` must precede the first `poly`.
struct VarietyFile {
  FieldPtr field;
  int m = -1;
  std::vector<Polynomial> polys;
};

/// Throws SyntaxError (or the field/polynomial error that caused it).
VarietyFile parse_variety(std::string_view text);
VarietyFile read_variety_file(const std::string& path);

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitValidation = 1, kExitParse = 2, kExitCap = 3 };

/// Runs the command line `args` (args[0] is the program name) writing the
/// report to `out` and diagnostics to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cbcodes
