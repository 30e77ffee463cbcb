/* Copyright 2026 The Multispace Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace msp::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitLimit = 2,
  kExitViolation = 3,
};

// Runs one command line (without the program name). Results go to `out`,
// diagnostics and statistics to `err`. `out_is_tty` selects the default
// output format: a table for terminals, JSON otherwise.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool out_is_tty = false);

}  // namespace msp::cli
